//! Quivers whose underlying graph is a disjoint union of simply laced
//! Dynkin diagrams (A, D, E). Construction validates the shape once;
//! everything downstream relies on it.

use crate::error::{Error, Result};
use std::fmt;

/// Arrow with 0-based endpoints. Public constructors and all text I/O
/// use 1-based vertex numbers.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
        }
    }
}

/// Dynkin type of one connected component, together with the relabeling
/// onto the standard diagram: `vertices[k]` is the 0-based original vertex
/// sitting at standard position `k + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
    pub vertices: Vec<usize>,
}

impl DynkinType {
    pub fn label(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }
}

/// Edges of the standard diagram for a family/rank, as 1-based pairs in
/// standard numbering. A_n is the path 1-2-...-n. D_n attaches n-1 and n
/// to n-2. E_n is numbered with the short arm at 2 attached to 4 and the
/// long arm 4-5-...-n.
pub fn standard_edges(family: Family, rank: usize) -> Vec<(usize, usize)> {
    match family {
        Family::A => (1..rank).map(|k| (k, k + 1)).collect(),
        Family::D => {
            let mut e: Vec<(usize, usize)> = (1..rank - 2).map(|k| (k, k + 1)).collect();
            e.push((rank - 2, rank - 1));
            e.push((rank - 2, rank));
            e
        }
        Family::E => {
            let mut e = vec![(1, 3), (3, 4), (2, 4)];
            for k in 4..rank {
                e.push((k, k + 1));
            }
            e
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<Arrow>,
    types: Vec<DynkinType>,
}

impl Quiver {
    /// Builds a quiver from 1-based `(tail, head)` pairs and validates that
    /// the underlying graph is a disjoint union of A/D/E diagrams.
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut parsed = Vec::with_capacity(arrows.len());
        for &(t, h) in arrows {
            for v in [t, h] {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange {
                        found: v as i64,
                        max: n,
                    });
                }
            }
            if t == h {
                return Err(Error::LoopEdge { v: t });
            }
            parsed.push(Arrow {
                tail: t - 1,
                head: h - 1,
            });
        }
        // No multiple edges between the same unordered pair.
        let mut pairs: Vec<(usize, usize)> = parsed
            .iter()
            .map(|a| (a.tail.min(a.head), a.tail.max(a.head)))
            .collect();
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge {
                    a: w[0].0 + 1,
                    b: w[0].1 + 1,
                });
            }
        }
        let types = classify(n, &parsed)?;
        Ok(Quiver {
            n,
            arrows: parsed,
            types,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Dynkin type of every connected component, ordered by smallest vertex.
    pub fn dynkin_types(&self) -> &[DynkinType] {
        &self.types
    }

    /// Connected components as sorted 0-based vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(self.n, &self.arrows)
    }

    /// Same underlying graph with every arrow reversed.
    pub fn reversed(&self) -> Quiver {
        let arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .map(|a| (a.head + 1, a.tail + 1))
            .collect();
        Quiver::new(self.n, &arrows).expect("reversal preserves the underlying graph")
    }

    /// Disjoint union; vertices of `other` are shifted past `self`.
    pub fn disjoint_union(&self, other: &Quiver) -> Quiver {
        let mut arrows: Vec<(usize, usize)> = self
            .arrows
            .iter()
            .map(|a| (a.tail + 1, a.head + 1))
            .collect();
        arrows.extend(
            other
                .arrows
                .iter()
                .map(|a| (a.tail + 1 + self.n, a.head + 1 + self.n)),
        );
        Quiver::new(self.n + other.n, &arrows).expect("union of Dynkin graphs")
    }

    /// Canonical text form, re-parseable by `parse_quiver`.
    pub fn canonical_text(&self) -> String {
        let mut s = format!("vertices {}\n", self.n);
        for a in &self.arrows {
            s.push_str(&format!("arrow {} {}\n", a.tail + 1, a.head + 1));
        }
        s
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quiver(n={}, arrows=[", self.n)?;
        for (k, a) in self.arrows.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", a.tail + 1, a.head + 1)?;
        }
        write!(f, "])")
    }
}

fn components_of(n: usize, arrows: &[Arrow]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for a in arrows {
        adj[a.tail].push(a.head);
        adj[a.head].push(a.tail);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Classifies every component or reports why the graph is not Dynkin.
/// The orientation of arrows plays no role here.
pub fn classify(n: usize, arrows: &[Arrow]) -> Result<Vec<DynkinType>> {
    let mut adj = vec![Vec::new(); n];
    for a in arrows {
        adj[a.tail].push(a.head);
        adj[a.head].push(a.tail);
    }
    let mut out = Vec::new();
    for comp in components_of(n, arrows) {
        let edge_ends: usize = comp.iter().map(|&v| adj[v].len()).sum();
        let edges = edge_ends / 2;
        if edges != comp.len() - 1 {
            return Err(Error::NotDynkin(format!(
                "component containing vertex {} has a cycle",
                comp[0] + 1
            )));
        }
        out.push(classify_tree(&comp, &adj)?);
    }
    Ok(out)
}

fn classify_tree(comp: &[usize], adj: &[Vec<usize>]) -> Result<DynkinType> {
    if let Some(&v) = comp.iter().find(|&&v| adj[v].len() >= 4) {
        return Err(Error::NotDynkin(format!(
            "vertex {} has degree {}",
            v + 1,
            adj[v].len()
        )));
    }
    let branches: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() == 3).collect();
    match branches.len() {
        0 => Ok(classify_path(comp, adj)),
        1 => classify_branched(comp, adj, branches[0]),
        _ => Err(Error::NotDynkin(format!(
            "vertices {} and {} both have degree 3",
            branches[0] + 1,
            branches[1] + 1
        ))),
    }
}

fn walk_from(start: usize, prev: Option<usize>, adj: &[Vec<usize>]) -> Vec<usize> {
    // Follows a degree-<=2 path until a leaf or a branch vertex; the branch
    // vertex itself is not included.
    let mut path = Vec::new();
    let mut cur = start;
    let mut last = prev;
    loop {
        path.push(cur);
        if adj[cur].len() == 3 {
            path.pop();
            break;
        }
        let next = adj[cur].iter().copied().find(|&w| Some(w) != last);
        match next {
            Some(w) => {
                last = Some(cur);
                cur = w;
            }
            None => break,
        }
    }
    path
}

fn classify_path(comp: &[usize], adj: &[Vec<usize>]) -> DynkinType {
    if comp.len() == 1 {
        return DynkinType {
            family: Family::A,
            rank: 1,
            vertices: comp.to_vec(),
        };
    }
    let leaf = *comp
        .iter()
        .find(|&&v| adj[v].len() == 1)
        .expect("a tree with >=2 vertices has a leaf");
    let vertices = walk_from(leaf, None, adj);
    debug_assert_eq!(vertices.len(), comp.len());
    DynkinType {
        family: Family::A,
        rank: comp.len(),
        vertices,
    }
}

fn classify_branched(comp: &[usize], adj: &[Vec<usize>], center: usize) -> Result<DynkinType> {
    let mut arms: Vec<Vec<usize>> = adj[center]
        .iter()
        .map(|&w| walk_from(w, Some(center), adj))
        .collect();
    // Arm order: by (length, smallest original vertex); makes the labeling
    // deterministic when arms have equal length.
    arms.sort_by_key(|arm| (arm.len(), arm[0]));
    let (a, b, c) = (arms[0].len(), arms[1].len(), arms[2].len());
    debug_assert_eq!(a + b + c + 1, comp.len());
    let rank = comp.len();
    match (a, b) {
        (1, 1) => {
            // D_rank: long arm reversed is 1..rank-3, center is rank-2,
            // the two short leaves are rank-1 and rank (smaller index first).
            // D4 has three single-vertex arms; the smallest-indexed one
            // plays the long arm so it lands at standard position 1.
            let (long, leaf1, leaf2) = if c == 1 { (0, 1, 2) } else { (2, 0, 1) };
            let mut vertices: Vec<usize> = arms[long].iter().rev().copied().collect();
            vertices.push(center);
            vertices.push(arms[leaf1][0]);
            vertices.push(arms[leaf2][0]);
            Ok(DynkinType {
                family: Family::D,
                rank,
                vertices,
            })
        }
        (1, 2) if c <= 4 => {
            // E6/E7/E8 with arms (1,2,c). Standard positions: the length-2
            // arm is 1-3, the short leaf is 2, center is 4, long arm 5..rank.
            let mut vertices = vec![0usize; rank];
            vertices[0] = arms[1][1];
            vertices[2] = arms[1][0];
            vertices[1] = arms[0][0];
            vertices[3] = center;
            for (k, &v) in arms[2].iter().enumerate() {
                vertices[4 + k] = v;
            }
            Ok(DynkinType {
                family: Family::E,
                rank,
                vertices,
            })
        }
        _ => Err(Error::NotDynkin(format!(
            "branch at vertex {} has arm lengths ({a},{b},{c})",
            center + 1
        ))),
    }
}

/// Parses either the line-based file format (`vertices <n>` then
/// `arrow <i> <j>` lines, `#` comments) or a builtin descriptor such as
/// `A3:><`, `D5`, `E6`.
pub fn parse_quiver(text: &str) -> Result<Quiver> {
    let meaningful = text
        .lines()
        .map(|l| strip_comment(l).trim())
        .find(|l| !l.is_empty());
    match meaningful {
        Some(first) if first.starts_with("vertices") => parse_quiver_file(text),
        _ => parse_descriptor(text.trim()),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    }
}

pub fn parse_quiver_file(text: &str) -> Result<Quiver> {
    let mut n: Option<usize> = None;
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let keyword = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        let lineno = idx + 1;
        match keyword {
            "vertices" => {
                if n.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "repeated `vertices` line".into(),
                    });
                }
                if rest.len() != 1 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `vertices <n>`".into(),
                    });
                }
                let count: usize = rest[0].parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad vertex count `{}`", rest[0]),
                })?;
                n = Some(count);
            }
            "arrow" => {
                if n.is_none() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "`arrow` before `vertices`".into(),
                    });
                }
                if rest.len() != 2 {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "expected `arrow <tail> <head>`".into(),
                    });
                }
                let mut ends = [0usize; 2];
                for (k, w) in rest.iter().enumerate() {
                    ends[k] = w.parse().map_err(|_| Error::Parse {
                        line: lineno,
                        msg: format!("bad vertex `{w}`"),
                    })?;
                }
                arrows.push((ends[0], ends[1]));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown keyword `{other}`"),
                });
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing `vertices` line".into(),
    })?;
    Quiver::new(n, &arrows)
}

/// Builtin descriptors: `<Family><rank>` with an optional `:<orientation>`
/// suffix for type A. The orientation string has one character per edge,
/// `>` orienting edge k as k -> k+1 and `<` the other way; default is all
/// `>`. D and E descriptors orient every edge toward its higher-numbered
/// end; other orientations come from explicit quiver files.
pub fn parse_descriptor(desc: &str) -> Result<Quiver> {
    let bad = |msg: &str| Error::Descriptor {
        descriptor: desc.to_string(),
        msg: msg.to_string(),
    };
    let mut chars = desc.chars();
    let family = match chars.next() {
        Some('A' | 'a') => Family::A,
        Some('D' | 'd') => Family::D,
        Some('E' | 'e') => Family::E,
        _ => return Err(bad("expected family A, D or E")),
    };
    let body: String = chars.collect();
    let (rank_str, orient) = match body.split_once(':') {
        Some((r, o)) => (r, Some(o)),
        None => (body.as_str(), None),
    };
    let rank: usize = rank_str
        .parse()
        .map_err(|_| bad("rank is not a positive integer"))?;
    match family {
        Family::A if rank >= 1 => {}
        Family::D if rank >= 4 => {}
        Family::E if (6..=8).contains(&rank) => {}
        Family::A => return Err(bad("rank of A must be at least 1")),
        Family::D => return Err(bad("rank of D must be at least 4")),
        Family::E => return Err(bad("rank of E must be 6, 7 or 8")),
    }
    let arrows: Vec<(usize, usize)> = match family {
        Family::A => {
            let orient = orient.unwrap_or("");
            let dirs: Vec<char> = if orient.is_empty() {
                vec!['>'; rank - 1]
            } else {
                orient.chars().collect()
            };
            if dirs.len() != rank - 1 {
                return Err(bad(&format!(
                    "orientation must have {} characters, found {}",
                    rank - 1,
                    dirs.len()
                )));
            }
            let mut a = Vec::with_capacity(rank - 1);
            for (k, c) in dirs.iter().enumerate() {
                match c {
                    '>' => a.push((k + 1, k + 2)),
                    '<' => a.push((k + 2, k + 1)),
                    _ => return Err(bad("orientation characters must be `>` or `<`")),
                }
            }
            a
        }
        Family::D | Family::E => {
            if orient.is_some() {
                return Err(bad("orientation suffix is only supported for type A"));
            }
            standard_edges(family, rank)
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect()
        }
    };
    Quiver::new(rank, &arrows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file_format() {
        let q = parse_quiver("vertices 2\narrow 1 2\n").unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.arrows(), &[Arrow { tail: 0, head: 1 }]);
        assert_eq!(q.dynkin_types()[0].label(), "A2");
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let q = parse_quiver("# a path\nvertices 3 # three\n\narrow 1 2\narrow 3 2\n").unwrap();
        assert_eq!(q.arrows().len(), 2);
    }

    #[test]
    fn parses_descriptors() {
        let q = parse_quiver("A3:>>").unwrap();
        assert_eq!(
            q.arrows(),
            &[Arrow { tail: 0, head: 1 }, Arrow { tail: 1, head: 2 }]
        );
        let q = parse_quiver("A3:><").unwrap();
        assert_eq!(
            q.arrows(),
            &[Arrow { tail: 0, head: 1 }, Arrow { tail: 2, head: 1 }]
        );
        assert_eq!(parse_quiver("A1").unwrap().vertex_count(), 1);
        assert_eq!(parse_quiver("D4").unwrap().arrows().len(), 3);
        assert_eq!(parse_quiver("E6").unwrap().dynkin_types()[0].label(), "E6");
    }

    #[test]
    fn default_orientation_points_to_higher_labels() {
        for desc in ["D5", "E6", "E7", "E8"] {
            let q = parse_quiver(desc).unwrap();
            assert!(q.arrows().iter().all(|a| a.tail < a.head), "{desc}");
        }
        let a4 = parse_quiver("A4").unwrap();
        assert!(a4.arrows().iter().all(|a| a.head == a.tail + 1));
    }

    #[test]
    fn rejects_bad_descriptors() {
        for desc in ["B3", "A0", "D3", "E5", "E9", "A3:>", "A3:>x", "D4:>>>"] {
            assert!(
                matches!(parse_quiver(desc), Err(Error::Descriptor { .. })),
                "{desc}"
            );
        }
    }

    #[test]
    fn rejects_non_dynkin_graphs() {
        // 3-cycle
        let r = Quiver::new(3, &[(1, 2), (2, 3), (3, 1)]);
        assert!(matches!(r, Err(Error::NotDynkin(_))));
        // star with four branches
        let r = Quiver::new(5, &[(1, 5), (2, 5), (3, 5), (4, 5)]);
        assert!(matches!(r, Err(Error::NotDynkin(_))));
        // two branch vertices
        let r = Quiver::new(8, &[(1, 2), (2, 3), (3, 4), (2, 5), (3, 6), (6, 7), (5, 8)]);
        assert!(r.is_err());
        // duplicate edge, both parallel and anti-parallel
        assert!(matches!(
            Quiver::new(2, &[(1, 2), (1, 2)]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Quiver::new(2, &[(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(
            Quiver::new(2, &[(1, 1)]),
            Err(Error::LoopEdge { v: 1 })
        ));
        assert!(matches!(
            Quiver::new(2, &[(1, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn classifies_components() {
        let path5 = Quiver::new(5, &[(1, 2), (2, 3), (4, 3), (4, 5)]).unwrap();
        assert_eq!(path5.dynkin_types()[0].label(), "A5");

        let star = Quiver::new(4, &[(1, 2), (3, 2), (2, 4)]).unwrap();
        assert_eq!(star.dynkin_types()[0].label(), "D4");

        let two = Quiver::new(4, &[(1, 2), (4, 3)]).unwrap();
        let labels: Vec<String> = two.dynkin_types().iter().map(|t| t.label()).collect();
        assert_eq!(labels, ["A2", "A2"]);
    }

    #[test]
    fn classification_ignores_orientation() {
        let q = Quiver::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        let r = q.reversed();
        assert_eq!(q.dynkin_types(), r.dynkin_types());
    }

    #[test]
    fn relabeling_is_a_graph_isomorphism() {
        // Scrambled D6: the map onto standard positions must carry edges to
        // standard-diagram edges.
        let q = Quiver::new(6, &[(3, 1), (1, 6), (6, 2), (4, 6), (2, 5)]).unwrap();
        for t in q.dynkin_types() {
            let std_edges = standard_edges(t.family, t.rank);
            let mut mapped: Vec<(usize, usize)> = q
                .arrows()
                .iter()
                .map(|a| {
                    let p = t.vertices.iter().position(|&v| v == a.tail).unwrap() + 1;
                    let r = t.vertices.iter().position(|&v| v == a.head).unwrap() + 1;
                    (p.min(r), p.max(r))
                })
                .collect();
            mapped.sort_unstable();
            let mut expected: Vec<(usize, usize)> = std_edges
                .iter()
                .map(|&(a, b)| (a.min(b), a.max(b)))
                .collect();
            expected.sort_unstable();
            assert_eq!(mapped, expected);
        }
    }

    #[test]
    fn canonical_text_round_trips() {
        let q = parse_quiver("A3:><").unwrap();
        let r = parse_quiver(&q.canonical_text()).unwrap();
        assert_eq!(q, r);
    }

    #[test]
    fn empty_quiver_is_allowed() {
        let q = parse_quiver("vertices 0\n").unwrap();
        assert_eq!(q.vertex_count(), 0);
        assert!(q.dynkin_types().is_empty());
    }
}
