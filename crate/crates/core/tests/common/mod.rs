//! Helpers shared by the integration suites: an independent root
//! enumeration through simple reflections, orientation generators, and
//! dimension vector sweeps.

// Each suite compiles its own copy and uses a different subset.
#![allow(dead_code)]

use rigidq_core::{DimVec, Quiver};
use std::collections::BTreeSet;

/// Enumerates the positive roots by closing the simple roots under all
/// simple reflections of the symmetrized Cartan pairing, then keeping
/// the non-negative vectors. Shares no code with the box scan.
pub fn reflection_closure_roots(q: &Quiver) -> Vec<DimVec> {
    let n = q.vertex_count();
    let mut adjacent = vec![Vec::new(); n];
    for a in q.arrows() {
        adjacent[a.tail].push(a.head);
        adjacent[a.head].push(a.tail);
    }
    let mut seen: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut frontier: Vec<Vec<i64>> = seen.iter().cloned().collect();
    while let Some(v) = frontier.pop() {
        for i in 0..n {
            let mut w = v.clone();
            w[i] = -v[i] + adjacent[i].iter().map(|&j| v[j]).sum::<i64>();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen.into_iter()
        .filter(|v| v.iter().all(|&x| x >= 0) && v.iter().any(|&x| x > 0))
        .map(DimVec::new)
        .collect()
}

/// All 2^(n-1) orientations of the path on n vertices.
pub fn path_orientations(n: usize) -> Vec<Quiver> {
    let edges = n - 1;
    (0..1u32 << edges)
        .map(|mask| {
            let pairs: Vec<(usize, usize)> = (0..edges)
                .map(|k| {
                    if mask >> k & 1 == 0 {
                        (k + 1, k + 2)
                    } else {
                        (k + 2, k + 1)
                    }
                })
                .collect();
            Quiver::new(n, &pairs).expect("path is Dynkin")
        })
        .collect()
}

/// The standard-labeling quiver of a Dynkin descriptor such as "D5" or
/// "E8", with every edge pointing toward the higher label.
pub fn descriptor_quiver(text: &str) -> Quiver {
    rigidq_core::quiver::parse_quiver(text).expect("valid descriptor")
}

/// Same underlying graph with every second arrow reversed, giving a
/// genuinely different orientation for multi-edge diagrams.
pub fn alternate_orientation(q: &Quiver) -> Quiver {
    let pairs: Vec<(usize, usize)> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            if k % 2 == 0 {
                (a.head + 1, a.tail + 1)
            } else {
                (a.tail + 1, a.head + 1)
            }
        })
        .collect();
    Quiver::new(q.vertex_count(), &pairs).expect("reorientation stays Dynkin")
}

/// Every non-negative vector of length n with entry sum at most
/// `max_total`, in lexicographic order.
pub fn dimvecs_up_to(n: usize, max_total: i64) -> Vec<DimVec> {
    fn extend(n: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<DimVec>) {
        if cur.len() == n {
            out.push(DimVec::new(cur.clone()));
            return;
        }
        for v in 0..=budget {
            cur.push(v);
            extend(n, budget - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, max_total, &mut Vec::with_capacity(n), &mut out);
    out
}
