//! Finitely generated subgroups of free groups via Stallings folding.

use std::collections::BTreeSet;

use super::word::FreeWord;

/// The folded core graph of a subgroup of F_rank, based at vertex 0.
#[derive(Clone, Debug)]
pub struct SubgroupGraph {
    rank: u32,
    vertices: usize,
    /// Directed edges (source, generator, target).
    edges: BTreeSet<(usize, u32, usize)>,
}

impl SubgroupGraph {
    /// Build the bouquet of generator loops and fold it.
    pub fn new(rank: u32, generators: &[FreeWord]) -> Self {
        let mut vertices = 1;
        let mut edges = Vec::new();
        for g in generators {
            let letters: Vec<(u32, bool)> = g
                .syllables()
                .iter()
                .flat_map(|&(x, e)| std::iter::repeat_n((x, e > 0), e.unsigned_abs() as usize))
                .collect();
            let mut at = 0;
            for (k, &(x, pos)) in letters.iter().enumerate() {
                let next = if k + 1 == letters.len() {
                    0
                } else {
                    vertices += 1;
                    vertices - 1
                };
                edges.push(if pos { (at, x, next) } else { (next, x, at) });
                at = next;
            }
        }
        let mut graph = SubgroupGraph { rank, vertices, edges: BTreeSet::new() };
        graph.fold(edges);
        graph
    }

    fn fold(&mut self, mut edges: Vec<(usize, u32, usize)>) {
        let mut parent: Vec<usize> = (0..self.vertices).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        loop {
            for e in edges.iter_mut() {
                *e = (find(&mut parent, e.0), e.1, find(&mut parent, e.2));
            }
            edges.sort_unstable();
            edges.dedup();
            let mut merged = false;
            let by_source = edges.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1);
            if let Some(w) = by_source {
                let (a, b) = (w[0].2.min(w[1].2), w[0].2.max(w[1].2));
                parent[b] = a;
                merged = true;
            } else {
                let mut by_target: Vec<_> = edges.iter().map(|&(s, g, t)| (t, g, s)).collect();
                by_target.sort_unstable();
                if let Some(w) = by_target.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
                    let (a, b) = (w[0].2.min(w[1].2), w[0].2.max(w[1].2));
                    parent[b] = a;
                    merged = true;
                }
            }
            if !merged {
                break;
            }
        }
        // Relabel surviving vertices densely, keeping the base at 0.
        let mut roots: Vec<usize> = (0..self.vertices).map(|v| find(&mut parent, v)).collect();
        let mut distinct: Vec<usize> = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for r in roots.iter_mut() {
            *r = distinct.binary_search(r).expect("root is listed");
        }
        self.vertices = distinct.len();
        self.edges = edges.into_iter().map(|(s, g, t)| (roots[s], g, roots[t])).collect();
    }

    fn step(&self, v: usize, g: u32, forward: bool) -> Option<usize> {
        if forward {
            self.edges.range((v, g, 0)..=(v, g, usize::MAX)).next().map(|e| e.2)
        } else {
            self.edges.iter().find(|&&(_, h, t)| h == g && t == v).map(|e| e.0)
        }
    }

    /// Whether `w` lies in the subgroup: it reads a closed path at the base.
    pub fn contains(&self, w: &FreeWord) -> bool {
        let mut at = 0;
        for &(g, e) in w.syllables() {
            for _ in 0..e.unsigned_abs() {
                match self.step(at, g, e > 0) {
                    Some(next) => at = next,
                    None => return false,
                }
            }
        }
        at == 0
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    /// Index in F_rank: the number of vertices when the graph is a covering
    /// (every vertex has every label in and out), otherwise infinite.
    pub fn index(&self) -> Option<usize> {
        let full = self.edges.len() == self.vertices * self.rank as usize;
        full.then_some(self.vertices)
    }

    /// Free rank of the subgroup: edges − vertices + 1.
    pub fn free_rank(&self) -> usize {
        self.edges.len() + 1 - self.vertices
    }
}

/// Whether the subgroups generated by `a` and `b` coincide.
pub fn same_subgroup(rank: u32, a: &[FreeWord], b: &[FreeWord]) -> bool {
    let ga = SubgroupGraph::new(rank, a);
    let gb = SubgroupGraph::new(rank, b);
    b.iter().all(|w| ga.contains(w)) && a.iter().all(|w| gb.contains(w))
}
