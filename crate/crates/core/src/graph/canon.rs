//! Canonical labelling by exhaustive individualisation and refinement.
//!
//! No automorphism pruning: the search visits every leaf of the refinement
//! tree and keeps the lexicographically smallest relabelled adjacency. This
//! is only meant for the handful of small graphs inside cospectral families.

use super::Graph;

/// Returns the canonical relabelling of `g`. Two graphs are isomorphic
/// iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Graph {
    let mut best: Option<Graph> = None;
    let start = vec![(0..g.n()).collect::<Vec<_>>()];
    search(g, start, &mut best);
    best.expect("search visits at least one leaf")
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<Graph>) {
    refine(g, &mut cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let mut perm = vec![0; g.n()];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let leaf = g.permuted(&perm);
        if best.as_ref().is_none_or(|b| leaf.rows() < b.rows()) {
            *best = Some(leaf);
        }
        return;
    };
    for &v in &cells[t] {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[t].iter().copied().filter(|&u| u != v).collect();
        next[t] = vec![v];
        next.insert(t + 1, rest);
        search(g, next, best);
    }
}

/// Splits cells by neighbour counts into each splitter cell until the
/// partition is equitable. Sub-cells are ordered by count, so the result
/// depends only on the graph structure and the incoming cell order.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u64 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut c = 0;
            while c < cells.len() {
                if cells[c].len() > 1 {
                    let mut keyed: Vec<(u32, usize)> = cells[c]
                        .iter()
                        .map(|&v| ((g.rows()[v] & splitter).count_ones(), v))
                        .collect();
                    keyed.sort_unstable();
                    if keyed[0].0 != keyed[keyed.len() - 1].0 {
                        let mut parts: Vec<Vec<usize>> = Vec::new();
                        let mut last = None;
                        for (k, v) in keyed {
                            if last != Some(k) {
                                parts.push(Vec::new());
                                last = Some(k);
                            }
                            parts.last_mut().unwrap().push(v);
                        }
                        let added = parts.len() - 1;
                        cells.splice(c..=c, parts);
                        c += added;
                        changed = true;
                    }
                }
                c += 1;
            }
            s += 1;
        }
        if !changed {
            return;
        }
    }
}
