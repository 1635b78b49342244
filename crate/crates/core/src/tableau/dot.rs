use std::fmt::Write;

use super::ProofGraph;
use crate::formula::render;
use crate::pnp::Pnp;

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

fn label(node: &Pnp) -> String {
    let side = |set: &std::collections::BTreeSet<crate::formula::Formula>| {
        set.iter().map(render).collect::<Vec<_>>().join(", ")
    };
    format!(
        "pos: {{{}}}\\nneg: {{{}}}",
        escape(&side(&node.pos)),
        escape(&side(&node.neg))
    )
}

/// Graphviz rendering of a proof graph. Roots are drawn bold; with
/// `annotate_terminal`, last-state nodes are double circles.
pub fn to_dot(graph: &ProofGraph, annotate_terminal: bool) -> String {
    let mut out = String::from("digraph G {\n");
    for (id, node) in graph.nodes().iter().enumerate() {
        let mut attrs = vec![format!("label=\"{}\"", label(node))];
        if graph.is_root(id) {
            attrs.push("style=bold".to_string());
        }
        if annotate_terminal && node.is_terminal() {
            attrs.push("shape=doublecircle".to_string());
        }
        writeln!(out, "  n{id} [{}];", attrs.join(", ")).unwrap();
    }
    for id in 0..graph.node_count() {
        for succ in graph.successors(id) {
            writeln!(out, "  n{id} -> n{succ};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}
