//! Incidence-structure isomorphism and automorphism groups.
//!
//! Backtracking over point images, pruned by point signatures (sorted
//! incident block sizes) and checked on collinear triples: a bijection is
//! an isomorphism iff it induces a bijection of collinear triples, which
//! suffices for simple structures with all blocks of size at least 3.

use crate::incidence::IncidenceStructure;

/// A witnessing isomorphism: `mapping[p]` is the image of point `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCertificate {
    mapping: Vec<u16>,
}

impl IsoCertificate {
    pub fn mapping(&self) -> &[u16] {
        &self.mapping
    }

    /// The inverse certificate, witnessing isomorphism the other way.
    pub fn inverse(&self) -> IsoCertificate {
        let mut inv = vec![0u16; self.mapping.len()];
        for (p, &q) in self.mapping.iter().enumerate() {
            inv[q as usize] = p as u16;
        }
        IsoCertificate { mapping: inv }
    }

    /// Checks that the mapping carries the blocks of `a` bijectively onto
    /// the blocks of `b`.
    pub fn verify(&self, a: &IncidenceStructure, b: &IncidenceStructure) -> bool {
        if a.blocks().len() != b.blocks().len() {
            return false;
        }
        let Ok(image) = a.relabeled(&self.mapping) else {
            return false;
        };
        image.blocks() == b.blocks()
    }
}

struct Prepared {
    n: usize,
    signatures: Vec<Vec<u8>>,
    /// Blocks containing each point pair, as point bitmasks.
    pair_blocks: Vec<Vec<u64>>,
    /// Sorted sizes of the blocks through each point pair.
    pair_sizes: Vec<Vec<u8>>,
}

impl Prepared {
    fn build(s: &IncidenceStructure) -> Prepared {
        let n = s.num_points();
        assert!(n <= 64, "isomorphism search is limited to 64 points");
        let mut pair_blocks = vec![Vec::new(); n * n];
        let mut pair_sizes = vec![Vec::new(); n * n];
        for b in s.blocks() {
            let mut mask = 0u64;
            for &p in b {
                mask |= 1 << p;
            }
            for (i, &p) in b.iter().enumerate() {
                for &q in &b[i + 1..] {
                    pair_blocks[p as usize * n + q as usize].push(mask);
                    pair_blocks[q as usize * n + p as usize].push(mask);
                    pair_sizes[p as usize * n + q as usize].push(b.len() as u8);
                    pair_sizes[q as usize * n + p as usize].push(b.len() as u8);
                }
            }
        }
        for sizes in &mut pair_sizes {
            sizes.sort_unstable();
        }
        Prepared {
            n,
            signatures: s.point_signatures(),
            pair_blocks,
            pair_sizes,
        }
    }

    fn collinear(&self, p: u16, q: u16, r: u16) -> bool {
        self.pair_blocks[p as usize * self.n + q as usize]
            .iter()
            .any(|mask| mask & (1 << r) != 0)
    }

    fn pair_profile(&self, p: u16, q: u16) -> &[u8] {
        &self.pair_sizes[p as usize * self.n + q as usize]
    }
}

struct Search {
    a: Prepared,
    b: Prepared,
    find_all: bool,
    found: Vec<Vec<u16>>,
}

impl Search {
    fn new(a: &IncidenceStructure, b: &IncidenceStructure, find_all: bool) -> Option<Search> {
        if a.num_points() != b.num_points() || a.blocks().len() != b.blocks().len() {
            return None;
        }
        let mut sizes_a: Vec<usize> = a.blocks().iter().map(|b| b.len()).collect();
        let mut sizes_b: Vec<usize> = b.blocks().iter().map(|b| b.len()).collect();
        sizes_a.sort_unstable();
        sizes_b.sort_unstable();
        if sizes_a != sizes_b {
            return None;
        }
        let pa = Prepared::build(a);
        let pb = Prepared::build(b);
        let mut sig_a = pa.signatures.clone();
        let mut sig_b = pb.signatures.clone();
        sig_a.sort();
        sig_b.sort();
        if sig_a != sig_b {
            return None;
        }
        Some(Search {
            a: pa,
            b: pb,
            find_all,
            found: Vec::new(),
        })
    }

    fn run(&mut self) {
        let n = self.a.n;
        let candidates: Vec<Vec<u16>> = (0..n)
            .map(|p| {
                (0..n)
                    .filter(|&q| self.b.signatures[q] == self.a.signatures[p])
                    .map(|q| q as u16)
                    .collect()
            })
            .collect();
        if candidates.iter().any(|c| c.is_empty()) {
            return;
        }
        let mut image = vec![u16::MAX; n];
        let mut used = vec![false; n];
        self.extend(candidates, &mut image, &mut used, 0);
    }

    /// Forward-checking backtracker: assign the point with the fewest
    /// remaining candidates, then filter every other candidate list by the
    /// collinearity triples through the new assignment. In net-like
    /// structures two assignments force long chains of singleton
    /// candidates, which keeps the tree small.
    fn extend(
        &mut self,
        candidates: Vec<Vec<u16>>,
        image: &mut Vec<u16>,
        used: &mut Vec<bool>,
        depth: usize,
    ) {
        if !self.find_all && !self.found.is_empty() {
            return;
        }
        if depth == self.a.n {
            self.found.push(image.clone());
            return;
        }
        // Prefer points with few candidates that share blocks with many
        // assigned points: in net-like structures the third point of a
        // block becomes forced as soon as the other two are assigned.
        let connectivity = |r: usize| -> usize {
            (0..self.a.n)
                .filter(|&i| {
                    image[i] != u16::MAX
                        && !self.a.pair_blocks[r * self.a.n + i].is_empty()
                })
                .count()
        };
        let p = (0..self.a.n)
            .filter(|&p| image[p] == u16::MAX)
            .min_by_key(|&p| (candidates[p].len(), self.a.n - connectivity(p), p))
            .expect("an unassigned point exists");
        let my_candidates = candidates[p].clone();
        for q in my_candidates {
            if used[q as usize] {
                continue;
            }
            image[p] = q;
            used[q as usize] = true;
            if let Some(filtered) = self.filter(&candidates, image, p as u16, q) {
                self.extend(filtered, image, used, depth + 1);
            }
            image[p] = u16::MAX;
            used[q as usize] = false;
        }
    }

    /// Removes candidates incompatible with the new assignment `p -> q`:
    /// a candidate `c` for an unassigned `r` must see the same block-size
    /// profile through the pair `(r, p)` as through `(c, q)`, and every
    /// triple of `r`, `p` and an assigned point must have matching
    /// collinearity on both sides. Returns `None` when some point runs
    /// out of candidates.
    fn filter(
        &self,
        candidates: &[Vec<u16>],
        image: &[u16],
        p: u16,
        q: u16,
    ) -> Option<Vec<Vec<u16>>> {
        let assigned: Vec<(u16, u16)> = (0..self.a.n)
            .filter(|&i| image[i] != u16::MAX && i != p as usize)
            .map(|i| (i as u16, image[i]))
            .collect();
        let mut out = vec![Vec::new(); self.a.n];
        for r in 0..self.a.n {
            if image[r] != u16::MAX {
                continue;
            }
            let kept: Vec<u16> = candidates[r]
                .iter()
                .copied()
                .filter(|&c| {
                    c != q
                        && self.a.pair_profile(r as u16, p) == self.b.pair_profile(c, q)
                        && assigned.iter().all(|&(i, fi)| {
                            self.a.collinear(r as u16, p, i) == self.b.collinear(c, q, fi)
                        })
                })
                .collect();
            if kept.is_empty() {
                return None;
            }
            out[r] = kept;
        }
        Some(out)
    }
}

/// Searches for an isomorphism from `a` to `b`; `None` when they are not
/// isomorphic.
pub fn is_isomorphic(a: &IncidenceStructure, b: &IncidenceStructure) -> Option<IsoCertificate> {
    let mut search = Search::new(a, b, false)?;
    search.run();
    let mapping = search.found.into_iter().next()?;
    let cert = IsoCertificate { mapping };
    debug_assert!(cert.verify(a, b));
    Some(cert)
}

/// The full automorphism group of an incidence structure.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    pub generators: Vec<Vec<u16>>,
    pub order: u64,
}

/// Enumerates all automorphisms by the same backtracking, extracts a
/// generating set greedily, and computes the group order by an
/// orbit-stabilizer chain over the generators.
pub fn automorphism_group(s: &IncidenceStructure) -> AutomorphismGroup {
    let mut search = Search::new(s, s, true).expect("a structure is isomorphic to itself");
    search.run();
    let all = search.found;
    let degree = s.num_points();
    let identity: Vec<u16> = (0..degree as u16).collect();

    let mut generators: Vec<Vec<u16>> = Vec::new();
    let mut closure: Vec<Vec<u16>> = vec![identity.clone()];
    for perm in &all {
        if closure.contains(perm) {
            continue;
        }
        generators.push(perm.clone());
        closure = close_under_composition(&generators, degree);
    }
    let order = orbit_stabilizer_order(&generators, degree);
    debug_assert_eq!(order as usize, all.len());
    AutomorphismGroup { generators, order }
}

fn compose(f: &[u16], g: &[u16]) -> Vec<u16> {
    // (f . g)(x) = f(g(x))
    g.iter().map(|&x| f[x as usize]).collect()
}

fn close_under_composition(gens: &[Vec<u16>], degree: usize) -> Vec<Vec<u16>> {
    let identity: Vec<u16> = (0..degree as u16).collect();
    let mut seen = vec![identity];
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for elem in &frontier {
            for g in gens {
                let prod = compose(g, elem);
                if !seen.contains(&prod) {
                    seen.push(prod.clone());
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Group order from a generating set: |G| = |orbit(b)| * |Stab(b)|, with
/// stabilizer generators from Schreier's lemma, recursively.
fn orbit_stabilizer_order(gens: &[Vec<u16>], degree: usize) -> u64 {
    let gens: Vec<&Vec<u16>> = gens
        .iter()
        .filter(|g| g.iter().enumerate().any(|(i, &v)| v as usize != i))
        .collect();
    let Some(base) = (0..degree).find(|&p| gens.iter().any(|g| g[p] as usize != p)) else {
        return 1;
    };
    let identity: Vec<u16> = (0..degree as u16).collect();
    // Transversal: representative mapping `base` to each orbit point.
    let mut rep: Vec<Option<Vec<u16>>> = vec![None; degree];
    rep[base] = Some(identity);
    let mut frontier = vec![base];
    while let Some(point) = frontier.pop() {
        let r = rep[point].clone().expect("frontier points have reps");
        for g in &gens {
            let image = g[point] as usize;
            if rep[image].is_none() {
                rep[image] = Some(compose(g, &r));
                frontier.push(image);
            }
        }
    }
    let orbit: Vec<usize> = (0..degree).filter(|&p| rep[p].is_some()).collect();
    let mut stab_gens: Vec<Vec<u16>> = Vec::new();
    for &x in &orbit {
        let rx = rep[x].as_ref().unwrap();
        for g in &gens {
            let gx = g[x] as usize;
            let rgx = rep[gx].as_ref().unwrap();
            // Schreier generator: rep(g(x))^-1 . g . rep(x), fixes base.
            let schreier = compose(&invert(rgx), &compose(g, rx));
            if schreier[base] as usize == base
                && schreier.iter().enumerate().any(|(i, &v)| v as usize != i)
                && !stab_gens.contains(&schreier)
            {
                stab_gens.push(schreier);
            }
        }
    }
    orbit.len() as u64 * orbit_stabilizer_order(&stab_gens, degree)
}

fn invert(perm: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v as usize] = i as u16;
    }
    inv
}
