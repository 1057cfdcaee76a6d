//! Enumeration of normal subgroups of bounded index by a coset-table search.
//!
//! Tables are filled at their first undefined entry in row-major order,
//! either with an existing coset or with a new one, so every subgroup is met
//! in exactly one standardised table. After each choice, relator scans and
//! automorphism deductions are run to a fixpoint. The automorphism step
//! uses that the coset action of a normal subgroup is regular: for every
//! coset `c` the table has an automorphism sending coset 0 to `c`. Any
//! partial table where such a map is forced to be inconsistent is dropped.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use crate::permgroup::Perm;
use crate::presentation::Presentation;
use crate::{Caps, Error, Result};

const NONE: u32 = u32::MAX;

struct Conflict;

#[derive(Clone)]
struct Table {
    cols: usize,
    max: usize,
    n: usize,
    t: Vec<u32>,
}

fn inverse_col(col: usize) -> usize {
    col ^ 1
}

impl Table {
    fn new(gens: usize, max: usize) -> Self {
        Table { cols: 2 * gens, max, n: 1, t: vec![NONE; max * 2 * gens] }
    }

    fn get(&self, c: usize, col: usize) -> u32 {
        self.t[c * self.cols + col]
    }

    fn set(&mut self, c: usize, col: usize, d: usize) -> Result<bool, Conflict> {
        let current = self.get(c, col);
        if current != NONE {
            return if current as usize == d { Ok(false) } else { Err(Conflict) };
        }
        let back = self.get(d, inverse_col(col));
        if back != NONE && back as usize != c {
            return Err(Conflict);
        }
        self.t[c * self.cols + col] = d as u32;
        self.t[d * self.cols + inverse_col(col)] = c as u32;
        Ok(true)
    }

    /// Scans relator `r` (as column indices) at coset `c`, filling a single
    /// missing entry when possible.
    fn scan(&mut self, c: usize, r: &[usize]) -> Result<bool, Conflict> {
        let len = r.len();
        let mut f = c;
        let mut i = 0;
        while i < len {
            let nx = self.get(f, r[i]);
            if nx == NONE {
                break;
            }
            f = nx as usize;
            i += 1;
        }
        if i == len {
            return if f == c { Ok(false) } else { Err(Conflict) };
        }
        let mut b = c;
        let mut j = len;
        while j > i {
            let nx = self.get(b, inverse_col(r[j - 1]));
            if nx == NONE {
                break;
            }
            b = nx as usize;
            j -= 1;
        }
        if j == i {
            return if f == b { Ok(false) } else { Err(Conflict) };
        }
        if j == i + 1 {
            return self.set(f, r[i], b);
        }
        Ok(false)
    }

    /// Forces the automorphism sending 0 to `c` on the defined part of the
    /// table.
    fn regular_at(&mut self, c: usize) -> Result<bool, Conflict> {
        let mut changed = false;
        let mut sig = vec![NONE; self.n];
        let mut inv = vec![NONE; self.n];
        sig[0] = c as u32;
        inv[c] = 0;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let d = queue[head];
            head += 1;
            for col in 0..self.cols {
                let sd = sig[d] as usize;
                let e = self.get(d, col);
                let s = self.get(sd, col);
                match (e != NONE, s != NONE) {
                    (true, true) => {
                        let (e, s) = (e as usize, s as usize);
                        if sig[e] == NONE {
                            if inv[s] != NONE {
                                return Err(Conflict);
                            }
                            sig[e] = s as u32;
                            inv[s] = e as u32;
                            queue.push(e);
                        } else if sig[e] as usize != s {
                            return Err(Conflict);
                        }
                    }
                    (true, false) => {
                        let e = e as usize;
                        if sig[e] != NONE {
                            changed |= self.set(sd, col, sig[e] as usize)?;
                        }
                    }
                    (false, true) => {
                        let s = s as usize;
                        if inv[s] != NONE {
                            changed |= self.set(d, col, inv[s] as usize)?;
                        }
                    }
                    (false, false) => {}
                }
            }
        }
        Ok(changed)
    }

    fn deduce(&mut self, relators: &[Vec<usize>]) -> Result<(), Conflict> {
        loop {
            let mut changed = false;
            for c in 0..self.n {
                for r in relators {
                    changed |= self.scan(c, r)?;
                }
            }
            for c in 1..self.n {
                changed |= self.regular_at(c)?;
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn first_undefined(&self) -> Option<(usize, usize)> {
        (0..self.n * self.cols)
            .find(|&i| self.t[i] == NONE)
            .map(|i| (i / self.cols, i % self.cols))
    }

    fn images(&self) -> Vec<Perm> {
        (0..self.cols / 2)
            .map(|g| {
                Perm::from_images((0..self.n).map(|c| self.get(c, 2 * g) as usize).collect())
                    .expect("complete coset table columns are permutations")
            })
            .collect()
    }
}

struct Ctx<'a> {
    relators: &'a [Vec<usize>],
    nodes: AtomicU64,
    cap: u64,
    aborted: AtomicBool,
}

fn children(tab: &Table, ctx: &Ctx<'_>) -> Vec<Table> {
    let Some((c, col)) = tab.first_undefined() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut options: Vec<usize> = (0..tab.n).filter(|&d| tab.get(d, inverse_col(col)) == NONE).collect();
    if tab.n < tab.max {
        options.push(tab.n);
    }
    for d in options {
        let mut child = tab.clone();
        if d == child.n {
            child.n += 1;
        }
        if child.set(c, col, d).is_ok() && child.deduce(ctx.relators).is_ok() {
            out.push(child);
        }
    }
    out
}

fn search(tab: Table, depth: usize, ctx: &Ctx<'_>) -> Vec<Vec<Perm>> {
    if ctx.aborted.load(Ordering::Relaxed) {
        return Vec::new();
    }
    if ctx.nodes.fetch_add(1, Ordering::Relaxed) >= ctx.cap {
        ctx.aborted.store(true, Ordering::Relaxed);
        return Vec::new();
    }
    if tab.first_undefined().is_none() {
        return vec![tab.images()];
    }
    let kids = children(&tab, ctx);
    if depth < 6 {
        kids.into_par_iter().flat_map_iter(|k| search(k, depth + 1, ctx)).collect()
    } else {
        kids.into_iter().flat_map(|k| search(k, depth + 1, ctx)).collect()
    }
}

/// Generator images of the regular coset action for every normal subgroup
/// of index at most `max_index`, one tuple per subgroup, on `index` points.
pub fn normal_coset_actions(p: &Presentation, max_index: usize, caps: &Caps) -> Result<Vec<Vec<Perm>>> {
    if max_index == 0 {
        return Err(Error::Precondition("max index must be at least 1".into()));
    }
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|r| {
            r.letters()
                .iter()
                .map(|&l| {
                    let g = l.unsigned_abs() as usize - 1;
                    if l > 0 { 2 * g } else { 2 * g + 1 }
                })
                .collect()
        })
        .filter(|r: &Vec<usize>| !r.is_empty())
        .collect();
    let ctx = Ctx {
        relators: &relators,
        nodes: AtomicU64::new(0),
        cap: caps.search_nodes,
        aborted: AtomicBool::new(false),
    };
    let mut root = Table::new(p.generators().len(), max_index);
    if root.deduce(&relators).is_err() {
        return Ok(Vec::new());
    }
    let found = search(root, 0, &ctx);
    if ctx.aborted.load(Ordering::Relaxed) {
        return Err(Error::Resource { cap: "search_nodes", value: caps.search_nodes });
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_by_index(p: &Presentation, max: usize) -> Vec<usize> {
        let found = normal_coset_actions(p, max, &Caps::default()).unwrap();
        (1..=max).map(|n| found.iter().filter(|t| t.first().map_or(1, Perm::degree) == n).count()).collect()
    }

    #[test]
    fn infinite_cyclic() {
        let z = Presentation::parse(&["a"], &[]).unwrap();
        assert_eq!(count_by_index(&z, 6), vec![1; 6]);
    }

    #[test]
    fn free_group_rank_two() {
        // Normal subgroups of index n in F2 are generating pairs of groups of
        // order n counted up to automorphism: Z/2: 3, Z/3: 8/2, Z/4: 12/2 and
        // V4: 6/6, Z/5: 24/4, Z/6: 24/2 and S3: 18/6.
        let f2 = Presentation::parse(&["a", "b"], &[]).unwrap();
        assert_eq!(count_by_index(&f2, 6), vec![1, 3, 4, 7, 6, 15]);
    }

    #[test]
    fn every_action_is_regular_and_satisfies_relators() {
        let m = Presentation::parse(&["a", "b"], &["a^2", "b^3"]).unwrap();
        for images in normal_coset_actions(&m, 12, &Caps::default()).unwrap() {
            let d = images[0].degree();
            let g = crate::permgroup::close(d, images.clone(), &Caps::default()).unwrap();
            assert_eq!(g.order(), d);
            assert!(crate::presentation::verify_hom(&m, &images).unwrap());
        }
    }

    #[test]
    fn node_cap() {
        let f2 = Presentation::parse(&["a", "b"], &[]).unwrap();
        let caps = Caps { search_nodes: 5, ..Caps::default() };
        assert!(matches!(
            normal_coset_actions(&f2, 8, &caps),
            Err(Error::Resource { cap: "search_nodes", .. })
        ));
    }
}
