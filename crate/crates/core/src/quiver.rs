//! Finite quivers of type A: linearly oriented paths, oriented cycles, and
//! the full subquivers obtained by deleting vertices from either.
//!
//! Vertices are labelled by positive integers. `linear_an(n)` has arrows
//! `i -> i+1`. `cyclic_an(n)` has arrows `i+1 -> i` with `1 -> n` closing the
//! cycle, which matches the tube convention in [`crate::tube`] where the top
//! of a uniserial module sits `length - 1` steps above its socle.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Coarse classification of a quiver, recomputed whenever one is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Shape {
    /// A single path `v_1 -> v_2 -> ... -> v_m` (a lone vertex counts).
    LinearA,
    /// A single oriented cycle; one vertex with a loop counts.
    CyclicA,
    /// Two or more disjoint paths, or the empty quiver.
    LinearUnion,
    /// Anything else.
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: BTreeSet<Vertex>,
    arrows: Vec<(Vertex, Vertex)>,
    shape: Shape,
}

impl Quiver {
    /// Builds a quiver from explicit data. Arrow endpoints must be vertices.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>, arrows: Vec<(Vertex, Vertex)>) -> Result<Self> {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        for &(s, t) in &arrows {
            for v in [s, t] {
                if !vertices.contains(&v) {
                    return Err(Error::UnknownVertex(v));
                }
            }
        }
        let shape = classify(&vertices, &arrows);
        Ok(Quiver { vertices, arrows, shape })
    }

    pub fn linear_an(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize(n));
        }
        Quiver::new(1..=n, (1..n).map(|i| (i, i + 1)).collect())
    }

    pub fn cyclic_an(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize(n));
        }
        let arrows = (1..=n).map(|i| (if i == n { 1 } else { i + 1 }, i)).collect();
        Quiver::new(1..=n, arrows)
    }

    /// Full subquiver on `keep`.
    pub fn subquiver(&self, keep: &BTreeSet<Vertex>) -> Result<Self> {
        if let Some(v) = keep.iter().find(|v| !self.vertices.contains(v)) {
            return Err(Error::UnknownVertex(*v));
        }
        let arrows = self
            .arrows
            .iter()
            .copied()
            .filter(|(s, t)| keep.contains(s) && keep.contains(t))
            .collect();
        Quiver::new(keep.iter().copied(), arrows)
    }

    /// Subquiver on the vertices not in `drop`.
    pub fn without(&self, drop: &BTreeSet<Vertex>) -> Self {
        let keep: BTreeSet<Vertex> = self.vertices.difference(drop).copied().collect();
        self.subquiver(&keep).expect("kept vertices come from the quiver")
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn arrows(&self) -> &[(Vertex, Vertex)] {
        &self.arrows
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm.
        let mut indeg: BTreeMap<Vertex, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for &(_, t) in &self.arrows {
            *indeg.get_mut(&t).unwrap() += 1;
        }
        let mut queue: VecDeque<Vertex> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&v, _)| v).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    let d = indeg.get_mut(&t).unwrap();
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(t);
                    }
                }
            }
        }
        seen == self.vertices.len()
    }

    /// Vertices with no outgoing arrow.
    pub fn sinks(&self) -> BTreeSet<Vertex> {
        let tails: BTreeSet<Vertex> = self.arrows.iter().map(|a| a.0).collect();
        self.vertices.difference(&tails).copied().collect()
    }

    /// Vertices with no incoming arrow.
    pub fn sources(&self) -> BTreeSet<Vertex> {
        let heads: BTreeSet<Vertex> = self.arrows.iter().map(|a| a.1).collect();
        self.vertices.difference(&heads).copied().collect()
    }

    /// Whether a path of length at least zero leads from `from` to `to`.
    pub fn path_exists(&self, from: Vertex, to: Vertex) -> bool {
        self.reachable_from(from).contains(&to)
    }

    /// All vertices reachable from `from`, including `from` itself.
    pub fn reachable_from(&self, from: Vertex) -> BTreeSet<Vertex> {
        let mut seen = BTreeSet::new();
        if !self.vertices.contains(&from) {
            return seen;
        }
        let mut queue = VecDeque::from([from]);
        seen.insert(from);
        while let Some(v) = queue.pop_front() {
            for &(s, t) in &self.arrows {
                if s == v && seen.insert(t) {
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Components of a linear union as vertex lists in arrow order, sorted
    /// by their first vertex.
    pub fn chains(&self) -> Result<Vec<Vec<Vertex>>> {
        if !matches!(self.shape, Shape::LinearA | Shape::LinearUnion) {
            return Err(Error::NotLinear);
        }
        let next: BTreeMap<Vertex, Vertex> = self.arrows.iter().copied().collect();
        let mut chains: Vec<Vec<Vertex>> = self
            .sources()
            .into_iter()
            .map(|start| {
                let mut chain = vec![start];
                while let Some(&n) = next.get(chain.last().unwrap()) {
                    chain.push(n);
                }
                chain
            })
            .collect();
        chains.sort();
        Ok(chains)
    }
}

fn classify(vertices: &BTreeSet<Vertex>, arrows: &[(Vertex, Vertex)]) -> Shape {
    if vertices.is_empty() {
        return Shape::LinearUnion;
    }
    let mut outdeg: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut indeg: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &(s, t) in arrows {
        *outdeg.entry(s).or_default() += 1;
        *indeg.entry(t).or_default() += 1;
    }
    if outdeg.values().chain(indeg.values()).any(|&d| d > 1) {
        return Shape::Other;
    }
    // Every vertex has in- and out-degree at most one, so components are
    // paths or cycles. Walk the undirected components.
    let mut adjacent: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(s, t) in arrows {
        adjacent.entry(s).or_default().push(t);
        adjacent.entry(t).or_default().push(s);
    }
    let mut seen = BTreeSet::new();
    let (mut paths, mut cycles) = (0, 0);
    for &v in vertices {
        if seen.contains(&v) {
            continue;
        }
        let mut stack = vec![v];
        let mut component = BTreeSet::new();
        while let Some(u) = stack.pop() {
            if component.insert(u) {
                stack.extend(adjacent.get(&u).into_iter().flatten().copied());
            }
        }
        let inner = arrows.iter().filter(|(s, _)| component.contains(s)).count();
        if inner == component.len() {
            cycles += 1;
        } else {
            paths += 1;
        }
        seen.extend(component);
    }
    match (paths, cycles) {
        (1, 0) => Shape::LinearA,
        (0, 1) => Shape::CyclicA,
        (_, 0) => Shape::LinearUnion,
        _ => Shape::Other,
    }
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "shape")]
enum QuiverRepr {
    #[serde(rename = "linearA")]
    LinearA { n: u32 },
    #[serde(rename = "cyclicA")]
    CyclicA { n: u32 },
    #[serde(rename = "explicit")]
    Explicit {
        vertices: Vec<Vertex>,
        arrows: Vec<(Vertex, Vertex)>,
    },
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.vertices.len() as u32;
        let repr = if n > 0 && Quiver::linear_an(n).as_ref() == Ok(self) {
            QuiverRepr::LinearA { n }
        } else if n > 0 && Quiver::cyclic_an(n).as_ref() == Ok(self) {
            QuiverRepr::CyclicA { n }
        } else {
            QuiverRepr::Explicit {
                vertices: self.vertices.iter().copied().collect(),
                arrows: self.arrows.clone(),
            }
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let built = match QuiverRepr::deserialize(deserializer)? {
            QuiverRepr::LinearA { n } => Quiver::linear_an(n),
            QuiverRepr::CyclicA { n } => Quiver::cyclic_an(n),
            QuiverRepr::Explicit { vertices, arrows } => Quiver::new(vertices, arrows),
        };
        built.map_err(serde::de::Error::custom)
    }
}
