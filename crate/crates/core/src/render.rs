//! Text renderings: vertex tuples, label grids, layered listings and DOT.

use std::fmt::Write as _;

use itertools::Itertools;

use crate::bbw::{Label, LabeledDiagram};
use crate::complex::SingularComplex;
use crate::hasse::{RelativeDiagram, RelativeVertex};
use crate::weights::{Coord, SingularityProfile};

/// Formats a coordinate group compactly: digits are concatenated when every
/// value is a single decimal digit, otherwise comma-separated.
pub fn group_string(group: &[Coord]) -> String {
    if group.iter().all(|&c| (0..10).contains(&c)) {
        group.iter().map(|c| c.to_string()).collect()
    } else {
        group.iter().join(",")
    }
}

/// `(g1|g2|g3)` or `(g2|g3)` when the fixed prefix is empty.
pub fn vertex_string(v: &RelativeVertex) -> String {
    if v.g1.is_empty() {
        format!("({}|{})", group_string(&v.g2), group_string(&v.g3))
    } else {
        format!(
            "({}|{}|{})",
            group_string(&v.g1),
            group_string(&v.g2),
            group_string(&v.g3)
        )
    }
}

/// One-line summary of the singularity analysis.
pub fn ascii_profile(profile: &SingularityProfile) -> String {
    format!(
        "n={} k={} l={} S=[{}] I=[{}] J=[{}]\n",
        profile.n(),
        profile.k(),
        profile.order(),
        profile.positions().iter().join(","),
        profile.repeated().iter().join(","),
        profile.nonrepeated().iter().join(","),
    )
}

/// Layered listing of a diagram, one line per degree, plus the arrow list.
pub fn ascii_relative(diagram: &RelativeDiagram) -> String {
    let mut out = String::new();
    for p in 0..=diagram.max_degree() {
        let row = diagram
            .vertices
            .iter()
            .filter(|v| v.p == p)
            .map(vertex_string)
            .join("  ");
        let _ = writeln!(out, "p={p}: {row}");
    }
    let _ = writeln!(out, "arrows:");
    for a in &diagram.arrows {
        let _ = writeln!(
            out,
            "  {} -> {}  dir {}",
            vertex_string(&diagram.vertices[a.src]),
            vertex_string(&diagram.vertices[a.dst]),
            a.direction
        );
    }
    out
}

/// The row/column position of a vertex in the triangular label grid, when
/// `g2` has exactly two entries. `values` is the descending list available to
/// `g2` and `g3`; cell `(i, j)` (1-based, `i <= j`) holds the vertex with
/// `g2 = (values[i-1], values[j])`.
fn grid_position(values: &[Coord], g2: &[Coord]) -> Option<(usize, usize)> {
    let i = values.iter().position(|&v| v == g2[0])? + 1;
    let j = values.iter().position(|&v| v == g2[1])?;
    Some((i, j))
}

/// Renders the label grid of a labeled diagram with `a == 2` as an
/// upper-triangular matrix. Returns `None` for other shapes.
pub fn ascii_grid(ld: &LabeledDiagram) -> Option<String> {
    let start = &ld.diagram.vertices[ld.diagram.start];
    if start.g2.len() != 2 {
        return None;
    }
    let mut values: Vec<Coord> = start.g2.iter().chain(start.g3.iter()).copied().collect();
    values.sort_unstable_by(|x, y| y.cmp(x));
    let size = values.len() - 1;

    let mut cells = vec![vec![String::new(); size]; size];
    for (v, label) in ld.diagram.vertices.iter().zip(&ld.labels) {
        let (i, j) = grid_position(&values, &v.g2)?;
        cells[i - 1][j - 1] = label.to_string();
    }

    let width = cells
        .iter()
        .flatten()
        .map(String::len)
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for (i, row) in cells.iter().enumerate() {
        let line = row
            .iter()
            .enumerate()
            .map(|(j, cell)| {
                if j < i {
                    " ".repeat(width)
                } else {
                    format!("{cell:>width$}")
                }
            })
            .join(" ");
        let _ = writeln!(out, "{}", line.trim_end());
    }
    Some(out)
}

/// Labeled diagram rendering: the grid when `a == 2`, otherwise a layered
/// listing with labels.
pub fn ascii_images(ld: &LabeledDiagram) -> String {
    if let Some(grid) = ascii_grid(ld) {
        return grid;
    }
    let mut out = String::new();
    for p in 0..=ld.diagram.max_degree() {
        let row = ld
            .diagram
            .vertices
            .iter()
            .zip(&ld.labels)
            .filter(|(v, _)| v.p == p)
            .map(|(v, label)| format!("{}:{}", vertex_string(v), label))
            .join("  ");
        let _ = writeln!(out, "p={p}: {row}");
    }
    out
}

/// Complex rendering: the label grid (when available) followed by the chain
/// spaces and the jump-arrow table with page and operator order.
pub fn ascii_complex(ld: &LabeledDiagram, complex: &SingularComplex) -> String {
    let mut out = ascii_images(ld);
    let _ = writeln!(out);
    for (s, ids) in complex.chain_spaces.iter().enumerate() {
        let row = ids
            .iter()
            .map(|&idx| vertex_string(&ld.diagram.vertices[complex.vertices[idx].base]))
            .join("  ");
        let _ = writeln!(out, "s={s}: {row}");
    }
    let _ = writeln!(out, "arrows:");
    for a in &complex.arrows {
        let _ = writeln!(
            out,
            "  {} -> {}  dir {}  d{}  order {}  {}",
            vertex_string(&ld.diagram.vertices[complex.vertices[a.src].base]),
            vertex_string(&ld.diagram.vertices[complex.vertices[a.dst].base]),
            a.direction,
            a.steps,
            a.order,
            if a.standard { "standard" } else { "nonstandard" }
        );
    }
    out
}

/// DOT rendering of the labeled diagram, optionally overlaying the jump
/// arrows of the assembled complex. Vanishing vertices are dashed; jump
/// arrows are labeled with their page and operator order.
pub fn dot(ld: &LabeledDiagram, complex: Option<&SingularComplex>) -> String {
    let mut out = String::from("digraph bgg {\n  rankdir=LR;\n  node [shape=box];\n");
    for (id, (v, label)) in ld.diagram.vertices.iter().zip(&ld.labels).enumerate() {
        let style = match label {
            Label::Vanishing => ", style=dashed",
            Label::Cohomology(_) => "",
        };
        let _ = writeln!(
            out,
            "  v{id} [label=\"{}\\nq={label}\"{}];",
            vertex_string(v),
            style
        );
    }
    for a in &ld.diagram.arrows {
        let _ = writeln!(out, "  v{} -> v{} [label=\"r{}\"];", a.src, a.dst, a.direction);
    }
    if let Some(complex) = complex {
        for a in &complex.arrows {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"d{}/ord {}\", color=blue, constraint=false];",
                complex.vertices[a.src].base, complex.vertices[a.dst].base, a.steps, a.order
            );
        }
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of the complex alone: numeric vertices and jump arrows.
pub fn dot_complex(ld: &LabeledDiagram, complex: &SingularComplex) -> String {
    let mut out = String::from("digraph bgg_complex {\n  rankdir=LR;\n  node [shape=box];\n");
    for (idx, v) in complex.vertices.iter().enumerate() {
        let _ = writeln!(
            out,
            "  c{idx} [label=\"{}\\ns={} q={}\"];",
            vertex_string(&ld.diagram.vertices[v.base]),
            v.s,
            v.q
        );
    }
    for a in &complex.arrows {
        let _ = writeln!(
            out,
            "  c{} -> c{} [label=\"d{}/ord {}\"];",
            a.src, a.dst, a.steps, a.order
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bbw::label_diagram;
    use crate::hasse::{build_regular_hasse, build_relative_hasse};
    use crate::weights::{analyze_singularity, Weight};

    fn labeled(coords: &[Coord], k: usize) -> LabeledDiagram {
        let mu = Weight::new(coords.to_vec()).unwrap();
        let profile = analyze_singularity(&mu, k).unwrap();
        label_diagram(build_relative_hasse(&profile).unwrap())
    }

    fn normalize(text: &str) -> Vec<Vec<String>> {
        text.lines()
            .map(|l| l.split_whitespace().map(str::to_owned).collect())
            .filter(|row: &Vec<String>| !row.is_empty())
            .collect()
    }

    #[test]
    fn grid_for_55432210() {
        let grid = ascii_grid(&labeled(&[5, 5, 4, 3, 2, 2, 1, 0], 4)).unwrap();
        let expected = "x x x x x\n  2 x 1 1\n    x 1 1\n      x x\n        0\n";
        assert_eq!(normalize(&grid), normalize(expected));
    }

    #[test]
    fn grid_for_54321100() {
        let grid = ascii_grid(&labeled(&[5, 4, 3, 2, 1, 1, 0, 0], 4)).unwrap();
        let expected = "4 4 4 x x\n  4 4 x x\n    4 x x\n      x x\n        x\n";
        assert_eq!(normalize(&grid), normalize(expected));
    }

    #[test]
    fn grid_unavailable_when_a_is_not_two() {
        let ld = labeled(&[6, 5, 4, 3, 2, 1, 0], 3);
        assert!(ascii_grid(&ld).is_none());
        assert!(ascii_images(&ld).starts_with("p=0:"));
    }

    #[test]
    fn dot_counts_for_regular_diagram() {
        let ld = label_diagram(build_regular_hasse(&[4, 3, 2, 1, 0], 2).unwrap());
        let text = dot(&ld, None);
        assert_eq!(text.matches("label=\"r").count(), 12);
        assert_eq!(text.matches("\\nq=").count(), 10);
    }

    #[test]
    fn vertex_strings_match_printed_format() {
        let v = RelativeVertex::new(vec![5, 2], vec![4, 3], vec![5, 2, 1, 0]).unwrap();
        assert_eq!(vertex_string(&v), "(52|43|5210)");
        let v = RelativeVertex::new(vec![], vec![4, 3], vec![2, 1, 0]).unwrap();
        assert_eq!(vertex_string(&v), "(43|210)");
        let v = RelativeVertex::new(vec![12], vec![10, 3], vec![1, 0]).unwrap();
        assert_eq!(vertex_string(&v), "(12|10,3|10)");
    }
}
