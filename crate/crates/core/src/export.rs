//! Graphviz output for Auslander-Reiten quivers and torsion-class lattices.

use std::fmt::Write;

use crate::an::{Interval, LinearCategory};
use crate::category::Category;
use crate::classify_an::enumerate_torsion_pairs;
use crate::classify_tube::{enumerate_tube_tps, tube_membership, Membership};
use crate::error::Result;
use crate::tube::{Tube, TubeModule};

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('"', "\\\""))
}

/// Irreducible maps as solid edges and the translate as dashed edges.
pub fn ar_quiver_linear(cat: &LinearCategory) -> String {
    let mut out = String::from("digraph ar {\n  rankdir=LR;\n");
    for x in cat.indecomposables() {
        writeln!(out, "  {};", quote(&x.to_string())).unwrap();
    }
    for x in cat.indecomposables() {
        let subs = cat.submodules(&x);
        // Inclusion of the maximal submodule and projection to the maximal
        // quotient.
        if subs.len() > 1 {
            let maximal_sub = subs[subs.len() - 2];
            let quotients = cat.quotients(&x);
            let maximal_quotient = quotients[quotients.len() - 2];
            writeln!(out, "  {} -> {};", quote(&maximal_sub.to_string()), quote(&x.to_string())).unwrap();
            writeln!(out, "  {} -> {};", quote(&x.to_string()), quote(&maximal_quotient.to_string())).unwrap();
        }
        if let Some(t) = cat.tau(&x) {
            writeln!(out, "  {} -> {} [style=dashed, constraint=false];", quote(&x.to_string()), quote(&t.to_string()))
                .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Modules of length at most `cap` in a tube.
pub fn ar_quiver_tube(tube: &Tube, cap: u32) -> String {
    let mut out = String::from("digraph ar {\n  rankdir=BT;\n");
    let modules = tube.up_to(cap);
    for x in &modules {
        writeln!(out, "  {};", quote(&x.to_string())).unwrap();
    }
    for x in &modules {
        if x.length < cap {
            let longer = TubeModule::new(x.socle, x.length + 1);
            let drop_socle = tube.quotients(&longer)[x.length as usize - 1];
            writeln!(out, "  {} -> {};", quote(&x.to_string()), quote(&longer.to_string())).unwrap();
            writeln!(out, "  {} -> {};", quote(&longer.to_string()), quote(&drop_socle.to_string())).unwrap();
        }
        if tube.rank() > 1 {
            let t = tube.tau(x);
            writeln!(out, "  {} -> {} [style=dashed, constraint=false];", quote(&x.to_string()), quote(&t.to_string()))
                .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of inclusions between torsion classes, given as
/// membership rows over a common list of objects.
fn hasse(labels: &[String], rows: &[Vec<bool>]) -> String {
    let below = |a: usize, b: usize| a != b && rows[a].iter().zip(&rows[b]).all(|(x, y)| !x || *y);
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n");
    for (i, label) in labels.iter().enumerate() {
        writeln!(out, "  t{i} [label={}];", quote(label)).unwrap();
    }
    for a in 0..rows.len() {
        for b in 0..rows.len() {
            if below(a, b) && !(0..rows.len()).any(|c| below(a, c) && below(c, b)) {
                writeln!(out, "  t{a} -> t{b};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn lattice_linear(cat: &LinearCategory) -> Result<String> {
    let objects: Vec<Interval> = cat.indecomposables();
    let pairs = enumerate_torsion_pairs(cat)?;
    let labels: Vec<String> = pairs
        .iter()
        .map(|tp| format!("{{{}}}", tp.torsion.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let rows: Vec<Vec<bool>> = pairs.iter().map(|tp| objects.iter().map(|x| tp.torsion.contains(x)).collect()).collect();
    Ok(hasse(&labels, &rows))
}

/// Torsion classes are compared on all modules up to length `2 rank + 2`.
pub fn lattice_tube(tube: &Tube) -> Result<String> {
    let data = enumerate_tube_tps(tube.rank())?;
    let objects = tube.up_to(2 * tube.rank() + 2);
    let labels: Vec<String> = data.iter().map(|d| d.to_string()).collect();
    let rows = data
        .iter()
        .map(|d| objects.iter().map(|x| Ok(tube_membership(d, x)? == Membership::Torsion)).collect::<Result<Vec<bool>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(hasse(&labels, &rows))
}
