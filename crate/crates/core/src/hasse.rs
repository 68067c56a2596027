//! Relative and regular BGG Hasse diagrams.
//!
//! Vertices carry three strictly descending coordinate groups `(g1|g2|g3)`
//! with `g1` fixed across the diagram; arrows exchange one `g2` entry with a
//! `g3` entry and raise the degree `p` by exactly one. The regular diagram is
//! the special case of an empty `g1`.

use std::collections::{HashMap, VecDeque};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::weights::{cross_inversions, strictly_descending, Coord, SingularityProfile};

pub type VertexId = usize;

/// A vertex `(g1|g2|g3)` of the relative Hasse diagram with its degree `p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelativeVertex {
    pub g1: Vec<Coord>,
    pub g2: Vec<Coord>,
    pub g3: Vec<Coord>,
    /// Relative Hasse degree: cross-inversions between `g2` and `g3`.
    pub p: usize,
}

impl RelativeVertex {
    pub fn new(g1: Vec<Coord>, g2: Vec<Coord>, g3: Vec<Coord>) -> Result<Self> {
        for group in [&g1, &g2, &g3] {
            if !strictly_descending(group) {
                return Err(Error::InvalidInput(format!(
                    "vertex groups must be strictly descending, got ({})",
                    group.iter().join(",")
                )));
            }
        }
        let p = cross_inversions(&g2, &g3);
        Ok(RelativeVertex { g1, g2, g3, p })
    }

    /// Immediate successors, tagged with their direction `r` (1-based index
    /// into `g2`).
    ///
    /// In direction `r` the entry `x = g2[r]` is exchanged with the maximal
    /// `g3` entry `y` below it; the arrow exists precisely when `y` still
    /// exceeds the next `g2` entry (with sentinel minus infinity past the end).
    pub fn successors(&self) -> Vec<(usize, RelativeVertex)> {
        let a = self.g2.len();
        let mut out = Vec::new();
        for r in 0..a {
            let x = self.g2[r];
            // g3 is descending, so the first entry below x is the maximal one.
            let Some(slot) = self.g3.iter().position(|&z| z < x) else {
                continue;
            };
            let y = self.g3[slot];
            let next = if r + 1 < a { self.g2[r + 1] } else { Coord::MIN };
            if y <= next {
                continue;
            }
            let mut g2 = self.g2.clone();
            let mut g3 = self.g3.clone();
            g2[r] = y;
            g3[slot] = x;
            debug_assert!(strictly_descending(&g3));
            let p = cross_inversions(&g2, &g3);
            debug_assert_eq!(p, self.p + 1);
            out.push((
                r + 1,
                RelativeVertex {
                    g1: self.g1.clone(),
                    g2,
                    g3,
                    p,
                },
            ));
        }
        out
    }
}

/// A direction-tagged covering arrow between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub src: VertexId,
    pub dst: VertexId,
    /// Direction `r` in `1..=a`: the `g2` position being exchanged.
    pub direction: usize,
}

/// The full Hasse diagram: vertices in BFS order from the start, plus all
/// covering arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeDiagram {
    pub vertices: Vec<RelativeVertex>,
    pub arrows: Vec<Arrow>,
    pub start: VertexId,
}

/// The regular diagram is a relative diagram with empty fixed prefix.
pub type RegularDiagram = RelativeDiagram;

impl RelativeDiagram {
    /// For each vertex, its successor id per direction (1-based), if any.
    pub fn direction_map(&self) -> Vec<HashMap<usize, VertexId>> {
        let mut map = vec![HashMap::new(); self.vertices.len()];
        for arrow in &self.arrows {
            let prev = map[arrow.src].insert(arrow.direction, arrow.dst);
            debug_assert!(prev.is_none(), "two arrows in one direction");
        }
        map
    }

    /// Maximal degree present in the diagram.
    pub fn max_degree(&self) -> usize {
        self.vertices.iter().map(|v| v.p).max().unwrap_or(0)
    }
}

/// The unique degree-0 vertex: `g1 = I`, and the remaining values sorted
/// descending with the top `a` entries in `g2`.
pub fn start_vertex(profile: &SingularityProfile) -> RelativeVertex {
    let mut rest: Vec<Coord> = profile.nonrepeated().to_vec();
    rest.extend(profile.repeated().iter().copied());
    rest.sort_unstable_by(|x, y| y.cmp(x));
    let g2 = rest[..profile.a()].to_vec();
    let g3 = rest[profile.a()..].to_vec();
    RelativeVertex::new(profile.repeated().to_vec(), g2, g3)
        .expect("start groups are strictly descending")
}

/// Builds the relative Hasse diagram by breadth-first closure of the
/// successor rule from the start vertex.
pub fn build_relative_hasse(profile: &SingularityProfile) -> Result<RelativeDiagram> {
    let diagram = close_from(start_vertex(profile))?;
    let a = profile.a() as u64;
    let b = profile.b() as u64;
    let expected = binomial(a + b, a);
    if diagram.vertices.len() as u64 != expected {
        return Err(Error::Internal(format!(
            "relative diagram has {} vertices, expected C({}, {}) = {}",
            diagram.vertices.len(),
            a + b,
            a,
            expected
        )));
    }
    Ok(diagram)
}

/// Builds the regular Hasse diagram on strictly descending `values` with a
/// first group of size `k_prime`. Used for regular inputs and as the
/// reduced-diagram oracle.
pub fn build_regular_hasse(values: &[Coord], k_prime: usize) -> Result<RegularDiagram> {
    if !strictly_descending(values) {
        return Err(Error::InvalidInput(format!(
            "regular diagram values must be strictly descending, got ({})",
            values.iter().join(",")
        )));
    }
    if k_prime > values.len() {
        return Err(Error::InvalidInput(format!(
            "first group size {} exceeds value count {}",
            k_prime,
            values.len()
        )));
    }
    let start = RelativeVertex::new(
        Vec::new(),
        values[..k_prime].to_vec(),
        values[k_prime..].to_vec(),
    )?;
    let diagram = close_from(start)?;
    let expected = binomial(values.len() as u64, k_prime as u64);
    if diagram.vertices.len() as u64 != expected {
        return Err(Error::Internal(format!(
            "regular diagram has {} vertices, expected {}",
            diagram.vertices.len(),
            expected
        )));
    }
    Ok(diagram)
}

fn close_from(start: RelativeVertex) -> Result<RelativeDiagram> {
    let mut vertices = vec![start.clone()];
    let mut ids: HashMap<(Vec<Coord>, Vec<Coord>), VertexId> = HashMap::new();
    ids.insert((start.g2.clone(), start.g3.clone()), 0);
    let mut arrows = Vec::new();
    let mut queue = VecDeque::from([0usize]);

    while let Some(src) = queue.pop_front() {
        let depth = vertices[src].p;
        for (direction, vertex) in vertices[src].successors() {
            if vertex.p != depth + 1 {
                return Err(Error::Internal(format!(
                    "arrow from degree {} reaches degree {}",
                    depth, vertex.p
                )));
            }
            let key = (vertex.g2.clone(), vertex.g3.clone());
            let dst = match ids.get(&key) {
                Some(&id) => id,
                None => {
                    let id = vertices.len();
                    ids.insert(key, id);
                    vertices.push(vertex);
                    queue.push_back(id);
                    id
                }
            };
            arrows.push(Arrow {
                src,
                dst,
                direction,
            });
        }
    }

    if vertices.iter().filter(|v| v.p == 0).count() != 1 {
        return Err(Error::Internal(
            "diagram must have exactly one degree-0 vertex".into(),
        ));
    }
    Ok(RelativeDiagram {
        vertices,
        arrows,
        start: 0,
    })
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{analyze_singularity, Weight};

    fn profile(coords: &[Coord], k: usize) -> SingularityProfile {
        analyze_singularity(&Weight::new(coords.to_vec()).unwrap(), k).unwrap()
    }

    fn vertex(g1: &[Coord], g2: &[Coord], g3: &[Coord]) -> RelativeVertex {
        RelativeVertex::new(g1.to_vec(), g2.to_vec(), g3.to_vec()).unwrap()
    }

    #[test]
    fn start_vertex_examples() {
        let p = profile(&[5, 5, 4, 3, 2, 2, 1, 0], 4);
        assert_eq!(start_vertex(&p), vertex(&[5, 2], &[5, 4], &[3, 2, 1, 0]));

        let p = profile(&[5, 4, 3, 2, 1, 1, 0, 0], 4);
        assert_eq!(start_vertex(&p), vertex(&[1, 0], &[5, 4], &[3, 2, 1, 0]));
    }

    #[test]
    fn start_vertex_with_empty_g2() {
        // l = k = 1, so g2 is empty and the diagram is a single vertex.
        let p = profile(&[1, 1], 1);
        let start = start_vertex(&p);
        assert!(start.g2.is_empty());
        let d = build_relative_hasse(&p).unwrap();
        assert_eq!(d.vertices.len(), 1);
        assert!(d.arrows.is_empty());
    }

    #[test]
    fn successor_rule_matches_printed_arrows() {
        let v = vertex(&[5, 2], &[4, 3], &[5, 2, 1, 0]);
        let succ = v.successors();
        assert_eq!(succ, vec![(2, vertex(&[5, 2], &[4, 2], &[5, 3, 1, 0]))]);

        let v = vertex(&[5, 2], &[4, 2], &[5, 3, 1, 0]);
        let succ = v.successors();
        assert_eq!(
            succ,
            vec![
                (1, vertex(&[5, 2], &[3, 2], &[5, 4, 1, 0])),
                (2, vertex(&[5, 2], &[4, 1], &[5, 3, 2, 0])),
            ]
        );

        let v = vertex(&[5, 2], &[1, 0], &[5, 4, 3, 2]);
        assert!(v.successors().is_empty());
    }

    #[test]
    fn relative_diagram_counts() {
        let p = profile(&[5, 5, 4, 3, 2, 2, 1, 0], 4);
        let d = build_relative_hasse(&p).unwrap();
        assert_eq!(d.vertices.len(), 15);
        // Triangular grid: 4 + 4 + 3 + 2 + 1 horizontal plus verticals.
        assert_eq!(d.vertices.iter().filter(|v| v.p == 0).count(), 1);
        assert_eq!(d.max_degree(), 8);
    }

    #[test]
    fn regular_diagram_matches_printed_g25_example() {
        let d = build_regular_hasse(&[4, 3, 2, 1, 0], 2).unwrap();
        assert_eq!(d.vertices.len(), 10);
        assert_eq!(d.arrows.len(), 12);
        let degrees: Vec<usize> = (0..=6)
            .map(|p| d.vertices.iter().filter(|v| v.p == p).count())
            .collect();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2, 1, 1]);
        // Start and terminal vertices.
        assert_eq!(d.vertices[d.start], vertex(&[], &[4, 3], &[2, 1, 0]));
        assert!(d
            .vertices
            .iter()
            .any(|v| *v == vertex(&[], &[1, 0], &[4, 3, 2]) && v.p == 6));
    }

    #[test]
    fn regular_diagram_degree_profile_on_gapped_values() {
        let d = build_regular_hasse(&[4, 3, 1, 0], 2).unwrap();
        assert_eq!(d.vertices.len(), 6);
        let degrees: Vec<usize> = (0..=4)
            .map(|p| d.vertices.iter().filter(|v| v.p == p).count())
            .collect();
        assert_eq!(degrees, vec![1, 1, 2, 1, 1]);
    }

    #[test]
    fn regular_diagram_trivial_and_error_cases() {
        let d = build_regular_hasse(&[3, 2, 1], 0).unwrap();
        assert_eq!(d.vertices.len(), 1);
        assert!(build_regular_hasse(&[3, 3, 1], 1).is_err());
    }

    #[test]
    fn degrees_agree_with_bfs_distance_and_inversions() {
        let p = profile(&[5, 5, 4, 3, 2, 2, 1, 0], 4);
        let d = build_relative_hasse(&p).unwrap();
        // BFS distance from start.
        let mut dist = vec![usize::MAX; d.vertices.len()];
        dist[d.start] = 0;
        let mut queue = std::collections::VecDeque::from([d.start]);
        while let Some(v) = queue.pop_front() {
            for a in d.arrows.iter().filter(|a| a.src == v) {
                if dist[a.dst] == usize::MAX {
                    dist[a.dst] = dist[v] + 1;
                    queue.push_back(a.dst);
                }
            }
        }
        for (id, v) in d.vertices.iter().enumerate() {
            assert_eq!(v.p, dist[id]);
            assert_eq!(v.p, cross_inversions(&v.g2, &v.g3));
        }
        for a in &d.arrows {
            assert_eq!(d.vertices[a.dst].p, d.vertices[a.src].p + 1);
        }
    }

    #[test]
    fn relative_degenerates_to_regular_when_l_is_zero() {
        let p = profile(&[4, 3, 2, 1, 0], 2);
        let rel = build_relative_hasse(&p).unwrap();
        let reg = build_regular_hasse(&[4, 3, 2, 1, 0], 2).unwrap();
        assert_eq!(rel.vertices.len(), reg.vertices.len());
        for (a, b) in rel.vertices.iter().zip(reg.vertices.iter()) {
            assert_eq!((&a.g2, &a.g3, a.p), (&b.g2, &b.g3, b.p));
        }
        assert_eq!(rel.arrows, reg.arrows);
    }

    // Length-2 intervals are not all diamonds: a straight two-step run in one
    // direction has a single middle vertex. What does hold is that no pair of
    // vertices admits more than two paths, and a double path always uses its
    // two directions in opposite orders.
    #[test]
    fn double_paths_anticommute_on_small_diagrams() {
        for (coords, k) in [
            (vec![4, 3, 2, 1, 0], 2),
            (vec![5, 5, 4, 3, 2, 2, 1, 0], 4),
            (vec![5, 4, 4, 3, 2, 1, 1, 0], 4),
            (vec![6, 5, 4, 3, 2, 1, 0], 3),
        ] {
            let p = profile(&coords, k);
            let d = build_relative_hasse(&p).unwrap();
            let mut paths: HashMap<(VertexId, VertexId), Vec<(usize, usize)>> = HashMap::new();
            for a in &d.arrows {
                for b in d.arrows.iter().filter(|b| b.src == a.dst) {
                    paths
                        .entry((a.src, b.dst))
                        .or_default()
                        .push((a.direction, b.direction));
                }
            }
            let mut saw_single = false;
            let mut saw_double = false;
            for (&(src, dst), dirs) in &paths {
                match dirs.as_slice() {
                    [_] => saw_single = true,
                    [(r1, s1), (r2, s2)] => {
                        saw_double = true;
                        assert!(
                            r1 == s2 && s1 == r2 && r1 != s1,
                            "double path {src}->{dst} with directions {dirs:?}"
                        );
                    }
                    _ => panic!("{} paths from {src} to {dst}", dirs.len()),
                }
            }
            assert!(saw_single && saw_double);
        }
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }
}
