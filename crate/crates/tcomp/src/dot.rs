//! Graphviz export of the pair graph.

use std::fmt::Write;

use tcomp_core::pairgraph::PairGraph;
use tcomp_core::Automaton;

/// Renders the pair graph with 1-based `{p,q}` vertex labels. Root vertices
/// get a doubled border. Vertices appear in canonical pair order and edges
/// by source, then letter declaration order, so output is reproducible.
pub fn pair_graph_dot(a: &Automaton, graph: &PairGraph) -> String {
    let mut out = String::from("digraph pair_graph {\n    node [shape=ellipse];\n");
    for (v, pair) in graph.pairs().enumerate() {
        if graph.is_root(v) {
            writeln!(out, "    \"{pair}\" [peripheries=2];").unwrap();
        } else {
            writeln!(out, "    \"{pair}\";").unwrap();
        }
    }
    for (source, letter, target) in graph.edges() {
        writeln!(
            out,
            "    \"{}\" -> \"{}\" [label=\"{}\"];",
            graph.pair_at(source),
            graph.pair_at(target),
            a.letter_name(letter).replace('"', "\\\"")
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
