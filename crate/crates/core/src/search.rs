//! Backtracking search for homomorphisms determined by generator images.
//!
//! A generating chain `g_1, …, g_k` is fixed up front together with a
//! spanning tree of each intermediate subgroup `S_i = ⟨g_1, …, g_i⟩`. Once
//! images for `g_1 … g_i` are chosen, the map on `S_i` is forced; it is a
//! homomorphism on `S_i` iff `f(e·g_t) = f(e)·f(g_t)` for every `e ∈ S_i`
//! and `t ≤ i`. Elementwise constraints and injectivity are checked as soon
//! as an element's image is known.

use std::ops::ControlFlow;

use crate::group::{self, FiniteGroup};

/// Generators picked greedily: each step adds the element that enlarges the
/// span the most (ties: larger order, then smaller index).
pub fn greedy_generators(g: &FiniteGroup) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut span = group::subgroup_generate(g, &gens);
    while !span.is_whole() {
        let mut best: Option<(usize, usize, usize)> = None;
        for x in g.elements().filter(|&x| !span.contains(x)) {
            let mut trial = gens.clone();
            trial.push(x);
            let size = group::subgroup_generate(g, &trial).order();
            let key = (size, g.element_order(x), usize::MAX - x);
            if best.is_none_or(|b| key > b) {
                best = Some(key);
            }
        }
        let (_, _, neg) = best.expect("span is proper");
        gens.push(usize::MAX - neg);
        span = group::subgroup_generate(g, &gens);
    }
    gens
}

struct Step {
    element: usize,
    parent: usize,
    generator: usize,
}

struct Chain {
    gens: Vec<usize>,
    /// Elements first reached at each level, in BFS order.
    levels: Vec<Vec<Step>>,
    /// Members of `S_i` after each level.
    spans: Vec<Vec<usize>>,
}

impl Chain {
    fn new(g: &FiniteGroup, gens: Vec<usize>) -> Chain {
        let mut reached = vec![false; g.order()];
        reached[0] = true;
        let mut span = vec![0];
        let mut levels = Vec::new();
        let mut spans = Vec::new();
        for i in 0..gens.len() {
            let mut steps = Vec::new();
            let mut queue = span.clone();
            let mut head = 0;
            while head < queue.len() {
                let e = queue[head];
                head += 1;
                for (t, &s) in gens[..=i].iter().enumerate() {
                    let next = g.mul(e, s);
                    if !reached[next] {
                        reached[next] = true;
                        queue.push(next);
                        steps.push(Step {
                            element: next,
                            parent: e,
                            generator: t,
                        });
                    }
                }
            }
            span = queue;
            spans.push(span.clone());
            levels.push(steps);
        }
        Chain {
            gens,
            levels,
            spans,
        }
    }
}

const UNSET: usize = usize::MAX;

pub struct MapSearch<'a> {
    domain: &'a FiniteGroup,
    codomain: &'a FiniteGroup,
    chain: Chain,
    injective: bool,
    allowed: &'a (dyn Fn(usize, usize) -> bool + Sync),
}

impl<'a> MapSearch<'a> {
    pub fn new(
        domain: &'a FiniteGroup,
        codomain: &'a FiniteGroup,
        injective: bool,
        allowed: &'a (dyn Fn(usize, usize) -> bool + Sync),
    ) -> Self {
        let gens = greedy_generators(domain);
        MapSearch {
            domain,
            codomain,
            chain: Chain::new(domain, gens),
            injective,
            allowed,
        }
    }

    pub fn generators(&self) -> &[usize] {
        &self.chain.gens
    }

    /// Calls `visit` on every homomorphism satisfying the constraints, in
    /// the order of increasing generator images.
    pub fn run(&self, visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>) {
        let mut img = vec![UNSET; self.domain.order()];
        img[0] = 0;
        let mut used = vec![false; self.codomain.order()];
        used[0] = true;
        if !(self.allowed)(0, 0) {
            return;
        }
        let _ = self.level(0, &mut img, &mut used, visit);
    }

    pub fn collect(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.run(&mut |m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.run(&mut |_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    pub fn first(&self) -> Option<Vec<usize>> {
        let mut found = None;
        self.run(&mut |m| {
            found = Some(m.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    fn level(
        &self,
        i: usize,
        img: &mut [usize],
        used: &mut [bool],
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if i == self.chain.gens.len() {
            return visit(img);
        }
        let (dom, cod) = (self.domain, self.codomain);
        let g = self.chain.gens[i];
        let ord = dom.element_order(g);
        for y in cod.elements() {
            let oy = cod.element_order(y);
            let order_ok = if self.injective {
                oy == ord
            } else {
                ord % oy == 0
            };
            if !order_ok || (self.injective && used[y]) || !(self.allowed)(g, y) {
                continue;
            }
            img[g] = y;
            let assigned = self.assign(i, img, used);
            if let Some(count) = assigned {
                if self.consistent(i, img) {
                    self.level(i + 1, img, used, visit)?;
                }
                self.unassign(i, count, img, used);
            } else {
                img[g] = UNSET;
            }
        }
        img[g] = UNSET;
        ControlFlow::Continue(())
    }

    /// Fills in images for the elements new at level `i`. On failure every
    /// partial write is undone and `None` is returned.
    fn assign(&self, i: usize, img: &mut [usize], used: &mut [bool]) -> Option<usize> {
        let cod = self.codomain;
        let steps = &self.chain.levels[i];
        for (n, step) in steps.iter().enumerate() {
            let gen_image = img[self.chain.gens[step.generator]];
            let v = cod.mul(img[step.parent], gen_image);
            let ok = (self.allowed)(step.element, v) && !(self.injective && used[v]);
            if !ok {
                self.unassign(i, n, img, used);
                return None;
            }
            img[step.element] = v;
            if self.injective {
                used[v] = true;
            }
        }
        Some(steps.len())
    }

    fn unassign(&self, i: usize, count: usize, img: &mut [usize], used: &mut [bool]) {
        for step in &self.chain.levels[i][..count] {
            if self.injective {
                used[img[step.element]] = false;
            }
            img[step.element] = UNSET;
        }
    }

    fn consistent(&self, i: usize, img: &[usize]) -> bool {
        let (dom, cod) = (self.domain, self.codomain);
        let gens = &self.chain.gens[..=i];
        self.chain.spans[i].iter().all(|&e| {
            gens.iter()
                .all(|&s| img[dom.mul(e, s)] == cod.mul(img[e], img[s]))
        })
    }
}

/// Every homomorphism `domain → codomain`, canonically sorted.
pub fn all_homomorphisms(domain: &FiniteGroup, codomain: &FiniteGroup) -> Vec<Vec<usize>> {
    let any = |_: usize, _: usize| true;
    let mut maps = MapSearch::new(domain, codomain, false, &any).collect();
    maps.sort();
    maps
}
