//! Direct-image labels via the Bott-Borel-Weil theorem.
//!
//! Dropping the first bar of a vertex `(g1|g2|g3)` leaves the length-k word
//! `g1.g2`. If it has a repeated value every direct image vanishes; otherwise
//! exactly one cohomology group survives, in degree equal to the number of
//! adjacent transpositions needed to sort the word into descending order,
//! which is its inversion count.

use std::collections::HashSet;
use std::fmt;

use crate::hasse::{RelativeDiagram, RelativeVertex};
use crate::weights::Coord;

/// Direct-image label of a relative vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    /// All direct images vanish (printed as `x`).
    Vanishing,
    /// Exactly one nonvanishing cohomology group, in this degree.
    Cohomology(usize),
}

impl Label {
    pub fn degree(&self) -> Option<usize> {
        match self {
            Label::Vanishing => None,
            Label::Cohomology(q) => Some(*q),
        }
    }

    pub fn is_numeric(&self) -> bool {
        self.degree().is_some()
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Vanishing => write!(f, "x"),
            Label::Cohomology(q) => write!(f, "{q}"),
        }
    }
}

/// Labels a single vertex from the concatenation `g1.g2`.
pub fn label_vertex(v: &RelativeVertex) -> Label {
    let word: Vec<Coord> = v.g1.iter().chain(v.g2.iter()).copied().collect();
    let mut seen = HashSet::new();
    if !word.iter().all(|c| seen.insert(*c)) {
        return Label::Vanishing;
    }
    let inversions = word
        .iter()
        .enumerate()
        .map(|(i, &a)| word[i + 1..].iter().filter(|&&b| a < b).count())
        .sum();
    Label::Cohomology(inversions)
}

/// A Hasse diagram with every vertex labeled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDiagram {
    pub diagram: RelativeDiagram,
    /// Indexed by vertex id.
    pub labels: Vec<Label>,
}

impl LabeledDiagram {
    pub fn label(&self, id: usize) -> Label {
        self.labels[id]
    }
}

/// Labels every vertex of the diagram.
pub fn label_diagram(diagram: RelativeDiagram) -> LabeledDiagram {
    let labels = diagram.vertices.iter().map(label_vertex).collect();
    LabeledDiagram { diagram, labels }
}
