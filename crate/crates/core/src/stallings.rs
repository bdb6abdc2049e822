//! Folded subgroup graphs for finitely generated subgroups of free groups.
//!
//! `SubgroupGraph::build` starts from a bouquet of generator loops at a base
//! vertex and folds until no vertex has two equally labelled edges in the
//! same direction, then trims hairs back to the core.  Membership is a
//! deterministic trace from base to base; `express` additionally rewrites the
//! traced word in the original generators.
//!
//! Rewriting works because every edge carries a coordinate word over the
//! symbols `U1..Uk` (one per input generator).  The construction maintains
//! the invariant that, for a ghost assignment of a base-to-vertex word `A(v)`
//! to every vertex, an edge `v --g--> w` with tag `κ` satisfies
//! `eval(κ) = A(v) · g · A(w)⁻¹` in the ambient free group.  Folding two
//! edges only ever requires the correction word `δ = κ₁⁻¹κ₂` (or its mirror
//! for co-folds), which is available without knowing the anchors themselves;
//! the base keeps anchor `1` throughout, so the tag product along a
//! base-to-base trace of `w` is a coordinate word evaluating to exactly `w`.

use std::collections::VecDeque;
use std::sync::Arc;

use thiserror::Error;

use crate::word::{compatible, Alphabet, Word, WordError};

#[derive(Debug, Error)]
pub enum FoldError {
    #[error("generator {index} is the identity word")]
    IdentityGenerator { index: usize },
    #[error("generator {index} is over a different alphabet")]
    GeneratorAlphabetMismatch { index: usize },
    #[error("word is over a different alphabet than the graph")]
    AlphabetMismatch,
    #[error("word {word} is not a member of the subgroup")]
    NotAMember { word: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone)]
struct BEdge {
    from: usize,
    to: usize,
    gen: usize,
    tag: Word,
    alive: bool,
}

/// An edge of the folded core graph, labelled by a single positive generator.
#[derive(Debug, Clone)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub gen: usize,
    tag: Word,
}

/// A folded, trimmed subgroup graph with a base vertex of index 0.
#[derive(Debug, Clone)]
pub struct SubgroupGraph {
    alphabet: Arc<Alphabet>,
    coord_alphabet: Arc<Alphabet>,
    generators: Vec<Word>,
    out: Vec<Vec<Option<usize>>>,
    inn: Vec<Vec<Option<usize>>>,
    edges: Vec<Edge>,
    rank: usize,
}

struct Builder {
    parent: Vec<usize>,
    incident: Vec<Vec<usize>>,
    edges: Vec<BEdge>,
    base: usize,
    coord: Arc<Alphabet>,
}

impl Builder {
    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    fn new_vertex(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        self.incident.push(Vec::new());
        id
    }

    fn add_edge(&mut self, from: usize, to: usize, gen: usize, tag: Word) {
        let id = self.edges.len();
        self.edges.push(BEdge { from, to, gen, tag, alive: true });
        self.incident[from].push(id);
        self.incident[to].push(id);
    }

    /// Unique alive edge ids incident to the representative `v`, ascending.
    fn incident_edges(&mut self, v: usize) -> Vec<usize> {
        let mut ids = self.incident[v].clone();
        ids.sort_unstable();
        ids.dedup();
        ids.retain(|&e| self.edges[e].alive);
        // Drop stale entries whose endpoints no longer resolve to v.
        ids.retain(|&e| {
            let (f, t) = (self.edges[e].from, self.edges[e].to);
            self.find(f) == v || self.find(t) == v
        });
        self.incident[v] = ids.clone();
        ids
    }

    /// Identifies the far endpoints of `kept` and `dropped`, two alive edges
    /// with equal labels leaving (`outward`) or entering the same vertex.
    /// Returns the surviving vertex so the caller can requeue it.
    fn fold_pair(&mut self, kept: usize, dropped: usize, outward: bool) -> usize {
        let (mut kept, mut dropped) = (kept, dropped);
        let far = |b: &mut Builder, e: usize| {
            let edge = &b.edges[e];
            let v = if outward { edge.to } else { edge.from };
            b.find(v)
        };
        let mut w1 = far(self, kept);
        let mut w2 = far(self, dropped);
        let base = self.find(self.base);
        if w2 == base {
            // The base anchor must survive every merge.
            std::mem::swap(&mut kept, &mut dropped);
            std::mem::swap(&mut w1, &mut w2);
        }
        if w1 == w2 {
            // Both tags express the same subgroup element; either is valid.
            self.edges[dropped].alive = false;
            return w1;
        }
        let delta = if outward {
            self.edges[kept].tag.invert().mul_unchecked(&self.edges[dropped].tag)
        } else {
            self.edges[kept].tag.mul_unchecked(&self.edges[dropped].tag.invert())
        };
        self.edges[dropped].alive = false;
        let delta_inv = delta.invert();
        for e in self.incident_edges(w2) {
            if e == dropped || !self.edges[e].alive {
                continue;
            }
            let from_w2 = self.find(self.edges[e].from) == w2;
            let to_w2 = self.find(self.edges[e].to) == w2;
            let tag = &self.edges[e].tag;
            let new_tag = match (from_w2, to_w2) {
                (true, true) => delta.mul_unchecked(tag).mul_unchecked(&delta_inv),
                (true, false) => delta.mul_unchecked(tag),
                (false, true) => tag.mul_unchecked(&delta_inv),
                (false, false) => continue,
            };
            self.edges[e].tag = new_tag;
        }
        self.parent[w2] = w1;
        let moved = std::mem::take(&mut self.incident[w2]);
        self.incident[w1].extend(moved);
        w1
    }

    fn fold(&mut self) {
        let mut worklist: VecDeque<usize> = (0..self.parent.len()).collect();
        while let Some(v) = worklist.pop_front() {
            let mut v = self.find(v);
            'rescan: loop {
                let ids = self.incident_edges(v);
                // Group by (direction, label); the first duplicate wins, so the
                // whole process is a deterministic function of the input order.
                for outward in [true, false] {
                    let mut seen: Vec<(usize, usize)> = Vec::new(); // (gen, edge)
                    for &e in &ids {
                        let edge = &self.edges[e];
                        if !edge.alive {
                            continue;
                        }
                        let near = if outward { edge.from } else { edge.to };
                        if self.find(near) != v {
                            continue;
                        }
                        let gen = self.edges[e].gen;
                        if let Some(&(_, first)) = seen.iter().find(|&&(g, _)| g == gen) {
                            let survivor = self.fold_pair(first, e, outward);
                            worklist.push_back(survivor);
                            v = self.find(v);
                            continue 'rescan;
                        }
                        seen.push((gen, e));
                    }
                }
                break;
            }
        }
    }

    /// Removes non-base vertices of degree one until only the core is left.
    fn trim(&mut self) {
        let base = self.find(self.base);
        loop {
            let endpoints: Vec<Option<(usize, usize)>> = (0..self.edges.len())
                .map(|i| {
                    if self.edges[i].alive {
                        Some((self.find(self.edges[i].from), self.find(self.edges[i].to)))
                    } else {
                        None
                    }
                })
                .collect();
            let mut degree: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
            for &(f, t) in endpoints.iter().flatten() {
                *degree.entry(f).or_insert(0) += 1;
                *degree.entry(t).or_insert(0) += 1;
            }
            let mut removed = false;
            let mut leaves: Vec<usize> = degree
                .iter()
                .filter(|&(&v, &d)| d == 1 && v != base)
                .map(|(&v, _)| v)
                .collect();
            leaves.sort_unstable();
            for leaf in leaves {
                for (i, ep) in endpoints.iter().enumerate() {
                    if let Some((f, t)) = ep {
                        if self.edges[i].alive && (*f == leaf || *t == leaf) {
                            self.edges[i].alive = false;
                            removed = true;
                            break;
                        }
                    }
                }
            }
            if !removed {
                break;
            }
        }
    }
}

impl SubgroupGraph {
    /// Folds the subgroup graph of `⟨generators⟩ ≤ F(alphabet)`.
    ///
    /// Deterministic for a fixed generator order; vertices are renumbered in
    /// breadth-first order from the base at the end, so equal inputs yield
    /// identical graphs.
    pub fn build(alphabet: &Arc<Alphabet>, generators: &[Word]) -> Result<SubgroupGraph, FoldError> {
        for (index, g) in generators.iter().enumerate() {
            if !compatible(alphabet, g.alphabet()) {
                return Err(FoldError::GeneratorAlphabetMismatch { index });
            }
            if g.is_identity() {
                return Err(FoldError::IdentityGenerator { index });
            }
        }
        let coord = Alphabet::coordinates(generators.len());
        let mut b = Builder {
            parent: Vec::new(),
            incident: Vec::new(),
            edges: Vec::new(),
            base: 0,
            coord: Arc::clone(&coord),
        };
        let base = b.new_vertex();
        for (i, g) in generators.iter().enumerate() {
            let letters: Vec<(usize, i8)> = g.letters().collect();
            let mut cur = base;
            for (pos, &(gen, sign)) in letters.iter().enumerate() {
                let last = pos + 1 == letters.len();
                let next = if last { base } else { b.new_vertex() };
                let tag = if last {
                    Word::single(&coord, i, sign as i64).expect("coord alphabet covers i")
                } else {
                    Word::identity(&coord)
                };
                if sign > 0 {
                    b.add_edge(cur, next, gen, tag);
                } else {
                    b.add_edge(next, cur, gen, tag);
                }
                cur = next;
            }
        }
        b.fold();
        b.trim();

        // Canonical breadth-first renumbering from the base.
        let base = b.find(b.base);
        let alive: Vec<usize> = (0..b.edges.len()).filter(|&e| b.edges[e].alive).collect();
        let resolve: Vec<(usize, usize)> = alive
            .iter()
            .map(|&e| (b.find(b.edges[e].from), b.find(b.edges[e].to)))
            .collect();
        let mut order: Vec<usize> = vec![base];
        let mut index_of = std::collections::HashMap::new();
        index_of.insert(base, 0usize);
        let mut queue = VecDeque::from([base]);
        let k = alphabet.len();
        while let Some(v) = queue.pop_front() {
            for gen in 0..k {
                for outward in [true, false] {
                    for (i, &(f, t)) in resolve.iter().enumerate() {
                        let e = &b.edges[alive[i]];
                        if e.gen != gen {
                            continue;
                        }
                        let (near, far) = if outward { (f, t) } else { (t, f) };
                        if near == v && !index_of.contains_key(&far) {
                            index_of.insert(far, order.len());
                            order.push(far);
                            queue.push_back(far);
                        }
                    }
                }
            }
        }

        let mut final_edges: Vec<Edge> = alive
            .iter()
            .zip(&resolve)
            .map(|(&e, &(f, t))| Edge {
                from: index_of[&f],
                to: index_of[&t],
                gen: b.edges[e].gen,
                tag: b.edges[e].tag.clone(),
            })
            .collect();
        final_edges.sort_by_key(|e| (e.from, e.gen, e.to));

        let vcount = order.len();
        let mut out = vec![vec![None; k]; vcount];
        let mut inn = vec![vec![None; k]; vcount];
        for (i, e) in final_edges.iter().enumerate() {
            debug_assert!(out[e.from][e.gen].is_none(), "graph not folded (out)");
            debug_assert!(inn[e.to][e.gen].is_none(), "graph not folded (in)");
            out[e.from][e.gen] = Some(i);
            inn[e.to][e.gen] = Some(i);
        }
        let rank = final_edges.len() + 1 - vcount;
        Ok(SubgroupGraph {
            alphabet: Arc::clone(alphabet),
            coord_alphabet: b.coord,
            generators: generators.to_vec(),
            out,
            inn,
            edges: final_edges,
            rank,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Alphabet of the coordinate symbols `U1..Uk` used by [`express`].
    ///
    /// [`express`]: SubgroupGraph::express
    pub fn coord_alphabet(&self) -> &Arc<Alphabet> {
        &self.coord_alphabet
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Free rank of the subgroup: `edges − vertices + 1` of the core graph.
    pub fn rank(&self) -> usize {
        self.rank
    }

    fn trace(&self, word: &Word) -> Option<Vec<(usize, i8)>> {
        let mut at = 0usize;
        let mut path = Vec::new();
        for (gen, sign) in word.letters() {
            let next = if sign > 0 {
                let e = self.out[at][gen]?;
                path.push((e, 1));
                self.edges[e].to
            } else {
                let e = self.inn[at][gen]?;
                path.push((e, -1));
                self.edges[e].from
            };
            at = next;
        }
        if at == 0 {
            Some(path)
        } else {
            None
        }
    }

    /// Membership test: does the reduced word label a base-to-base loop?
    pub fn contains(&self, word: &Word) -> Result<bool, FoldError> {
        if !compatible(&self.alphabet, word.alphabet()) {
            return Err(FoldError::AlphabetMismatch);
        }
        Ok(self.trace(word).is_some())
    }

    /// Rewrites a member in the subgroup's own generators: the result is a
    /// word over `U1..Uk` that evaluates back to `word` when `Ui` is replaced
    /// by generator `i`.  Not canonical — just correct.
    pub fn express(&self, word: &Word) -> Result<Word, FoldError> {
        if !compatible(&self.alphabet, word.alphabet()) {
            return Err(FoldError::AlphabetMismatch);
        }
        let path = self.trace(word).ok_or_else(|| FoldError::NotAMember {
            word: word.to_string(),
        })?;
        let mut acc = Word::identity(&self.coord_alphabet);
        for (e, dir) in path {
            let tag = &self.edges[e].tag;
            acc = if dir > 0 { acc.mul_unchecked(tag) } else { acc.mul_unchecked(&tag.invert()) };
        }
        Ok(acc)
    }

    /// Substitutes the graph's generators into a coordinate word.
    pub fn evaluate_coords(&self, coords: &Word) -> Result<Word, FoldError> {
        if !compatible(&self.coord_alphabet, coords.alphabet()) {
            return Err(FoldError::AlphabetMismatch);
        }
        let mut acc = Word::identity(&self.alphabet);
        for s in coords.syllables() {
            acc = acc.mul_unchecked(&self.generators[s.gen].pow(s.exp));
        }
        Ok(acc)
    }
}
