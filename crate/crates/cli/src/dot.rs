//! Graphviz rendering of a configuration graph.

use std::fmt::Write;

use recolor_core::{Budget, ConfigSpace, Graph};

/// Nodes are the proper k-colorings labeled by their color vectors, edges
/// join colorings one recoloring apart. Frozen colorings get a double border
/// and a fill.
pub fn export_config_dot(g: &Graph, k: usize, budget: Budget) -> Result<String, recolor_core::Error> {
    let space = ConfigSpace::build(g, k, budget)?;
    let census = space.census();
    let mut out = String::from("graph configurations {\n  node [shape=box, fontname=\"monospace\"];\n");
    for i in 0..space.len() {
        let label: Vec<String> = space.coloring(i).colors().iter().map(|c| c.to_string()).collect();
        write!(out, "  s{i} [label=\"{}\"", label.join(",")).unwrap();
        if census.frozen[i] {
            out.push_str(", frozen=true, peripheries=2, style=filled, fillcolor=\"#c6dbef\"");
        }
        out.push_str("];\n");
    }
    let mut scratch = vec![0; g.n()];
    for i in 0..space.len() {
        space.for_each_neighbor(i, &mut scratch, |_, j| {
            if i < j {
                writeln!(out, "  s{i} -- s{j};").unwrap();
            }
        });
    }
    out.push_str("}\n");
    Ok(out)
}
