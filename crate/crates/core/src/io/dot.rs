//! DOT export with the usual colour conventions: red solid, blue dashed,
//! yellow dotted, green heavy. Node and edge order is deterministic.

use crate::duality::Jewel;
use crate::gem::{Colour, Gem};
use crate::separation::{LambdaVertex, SeparationGraph};
use std::fmt::Write;

fn edge_attrs(colour: Colour) -> &'static str {
    match colour {
        Colour::Red => "color=red, style=solid",
        Colour::Blue => "color=blue, style=dashed",
        Colour::Yellow => "color=gold, style=dotted",
    }
}

fn write_matching(out: &mut String, pairs: &[(u32, u32)], attrs: &str) {
    for &(a, b) in pairs {
        writeln!(out, "    {a} -- {b} [{attrs}];").unwrap();
    }
}

/// DOT text for a gem.
pub fn dot_gem(gem: &Gem) -> String {
    let mut out = String::from("graph gem {\n    node [shape=point];\n");
    for v in 0..gem.n() {
        writeln!(out, "    {v} [label=\"{v}\"];").unwrap();
    }
    for colour in [Colour::Red, Colour::Blue, Colour::Yellow] {
        write_matching(&mut out, &gem.pairs(colour), edge_attrs(colour));
    }
    out.push_str("}\n");
    out
}

/// DOT text for a jewel: the gem plus its green diagonals.
pub fn dot_jewel(jewel: &Jewel) -> String {
    let gem = jewel.strip_green();
    let mut out = String::from("graph jewel {\n    node [shape=point];\n");
    for v in 0..gem.n() {
        writeln!(out, "    {v} [label=\"{v}\"];").unwrap();
    }
    for colour in [Colour::Red, Colour::Blue, Colour::Yellow] {
        write_matching(&mut out, &gem.pairs(colour), edge_attrs(colour));
    }
    write_matching(
        &mut out,
        &jewel.green_pairs(),
        "color=green, style=dotted, penwidth=2",
    );
    out.push_str("}\n");
    out
}

/// DOT text for a separation graph; vertices are labelled `v<i>` or `f<i>`
/// and edges by their corner id.
pub fn dot_separation(sep: &SeparationGraph) -> String {
    let mut out = String::from("graph separation {\n");
    let label = |lv: &LambdaVertex| match lv {
        LambdaVertex::Vertex(v) => format!("v{v}"),
        LambdaVertex::Face(f) => format!("f{f}"),
    };
    for lv in &sep.vertices {
        let name = label(lv);
        let shape = match lv {
            LambdaVertex::Vertex(_) => "circle",
            LambdaVertex::Face(_) => "box",
        };
        writeln!(out, "    {name} [shape={shape}];").unwrap();
    }
    for edge in &sep.edges {
        writeln!(
            out,
            "    {} -- {} [label=\"c{}\"];",
            label(&sep.vertices[edge.ends[0]]),
            label(&sep.vertices[edge.ends[1]]),
            edge.corner
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
