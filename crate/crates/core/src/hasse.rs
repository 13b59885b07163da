//! Graphviz export of Hasse diagrams, coloured by parabolic coset.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::bruhat::Interval;
use crate::coxeter::{CoxeterSystem, Element, GenSet};
use crate::parabolic::coset_rep;

/// Coset colours, assigned to representatives in ShortLex order.
pub const PALETTE: [&str; 4] = ["black", "red", "blue", "green"];

/// Renders the interval as an undirected DOT graph drawn bottom to top.
///
/// With `cosets = Some(J)` each node is coloured by its `W^J` representative;
/// otherwise everything is black.
pub fn hasse_dot(sys: &CoxeterSystem, interval: &Interval, cosets: Option<GenSet>) -> String {
    let mut colour_of: BTreeMap<Element, &str> = BTreeMap::new();
    let mut rep_of: BTreeMap<&Element, Element> = BTreeMap::new();
    if let Some(j) = cosets {
        for m in &interval.members {
            rep_of.insert(m, coset_rep(sys, m, j));
        }
        let mut reps: Vec<&Element> = rep_of.values().collect();
        reps.sort();
        reps.dedup();
        for (i, rep) in reps.into_iter().enumerate() {
            colour_of.insert(rep.clone(), PALETTE[i % PALETTE.len()]);
        }
    }

    let mut out = String::new();
    writeln!(out, "graph hasse {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for m in &interval.members {
        let colour = rep_of
            .get(m)
            .and_then(|rep| colour_of.get(rep))
            .copied()
            .unwrap_or("black");
        writeln!(
            out,
            "  \"{}\" [fontcolor={colour}];",
            sys.format(m)
        )
        .unwrap();
    }
    for (k, &size) in interval.rank_sizes.iter().enumerate() {
        if size > 1 {
            let names: Vec<String> = interval
                .rank(k)
                .iter()
                .map(|m| format!("\"{}\"", sys.format(m)))
                .collect();
            writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
        }
    }
    for (lower, upper) in interval.cover_edges(sys) {
        writeln!(out, "  \"{}\" -- \"{}\";", sys.format(&lower), sys.format(&upper)).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bruhat::lower_interval;
    use crate::presets;

    #[test]
    fn s4_longest_element_has_figure_colours() {
        let sys = presets::type_a(3);
        let w0 = sys.parse_element("s1s2s3s1s2s1").unwrap();
        let interval = lower_interval(&sys, &w0).unwrap();
        let dot = hasse_dot(&sys, &interval, Some(sys.parse_genset("s1,s2").unwrap()));
        assert!(dot.contains("\"e\" [fontcolor=black];"));
        assert!(dot.contains("\"s3\" [fontcolor=red];"));
        assert!(dot.contains("\"s2s3s2s1\" [fontcolor=blue];"));
        assert!(dot.contains("\"s1s2s3\" [fontcolor=green];"));
        // S_4 has 58 cover relations
        assert_eq!(dot.matches(" -- ").count(), 58);
    }

    #[test]
    fn uncoloured_export() {
        let sys = presets::type_a(2);
        let w = sys.parse_element("s1s2").unwrap();
        let dot = hasse_dot(&sys, &lower_interval(&sys, &w).unwrap(), None);
        assert!(!dot.contains("red"));
        assert_eq!(dot.matches(" -- ").count(), 4);
    }
}
