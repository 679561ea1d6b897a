//! All groups of a given order, up to isomorphism, by Cayley-table
//! backtracking.
//!
//! The search fills an `n x n` table whose identity row and column are fixed.
//! Every assignment is pushed through Latin-square bookkeeping and associativity
//! propagation: each of the four cells of a triple `(x, y, z)`
//! (`xy`, `yz`, `(xy)z`, `x(yz)`) triggers a rule that either derives a
//! missing cell or detects a contradiction.
//!
//! Labels not yet mentioned anywhere in the partial table are interchangeable.
//! Branching is therefore restricted to cells whose row and column are both
//! mentioned (the least unseen label is promoted when no such cell is open),
//! picks the one with the smallest domain, and tries at most one unseen value.
//! Element orders that do not divide `n` are pruned as soon as a power cycle
//! closes.
//!
//! Complete tables are bucketed by [`IsoFingerprint`] and deduplicated with
//! the isomorphism search; each class keeps its lexicographically least
//! table, so the output depends only on `n`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::time::Duration;

use crate::catalog::Catalog;
use crate::group::{Elem, FiniteGroup, GroupError};
use crate::iso::{fingerprint, isomorphism_unfiltered, IsoFingerprint};

/// Default largest order accepted by [`enumerate_groups`].
pub const DEFAULT_ENUM_CAP: usize = 16;
/// Labels are tracked in `u64` bitmasks.
pub const MAX_ENUM_ORDER: usize = 64;
/// Depth of the split used to hand subtrees to independent workers.
pub const FRONTIER_DEPTH: usize = 3;

const UNSET: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerateError {
    #[error("order {order} is outside the enumeration range 1..={cap}")]
    OrderOutOfRange { order: usize, cap: usize },
    #[error("enumeration of order {order} interrupted after {tables_explored} nodes ({classes_so_far} classes so far)")]
    Interrupted {
        order: usize,
        tables_explored: u64,
        complete_tables: u64,
        classes_so_far: usize,
    },
    #[error("search produced an invalid table: {0}")]
    InvalidTable(GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub cap: usize,
    /// Abort after this many search nodes.
    pub node_limit: Option<u64>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            cap: DEFAULT_ENUM_CAP,
            node_limit: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub order: usize,
    /// Pairwise non-isomorphic, sorted by fingerprint then table.
    pub groups: Vec<FiniteGroup>,
    /// Search nodes visited.
    pub tables_explored: u64,
    /// Complete group tables reached, before isomorphism reduction.
    pub complete_tables: u64,
    /// Filled in by drivers that have a clock.
    pub elapsed: Option<Duration>,
}

/// A partial Cayley table with its propagation state.
#[derive(Clone, Debug)]
pub struct SearchNode {
    n: usize,
    table: Vec<u8>,
    // rowpos[r * n + v] = column holding v in row r.
    rowpos: Vec<u8>,
    // colpos[c * n + v] = row holding v in column c.
    colpos: Vec<u8>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    mentioned: u64,
    open: usize,
    depth: usize,
}

impl SearchNode {
    pub fn root(n: usize) -> Self {
        let mut node = SearchNode {
            n,
            table: vec![UNSET; n * n],
            rowpos: vec![UNSET; n * n],
            colpos: vec![UNSET; n * n],
            row_used: vec![0; n],
            col_used: vec![0; n],
            mentioned: 1,
            open: n * n,
            depth: 0,
        };
        for x in 0..n {
            node.put(0, x, x as u8);
            if x != 0 {
                node.put(x, 0, x as u8);
            }
        }
        node.mentioned = 1;
        node
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    fn put(&mut self, a: usize, b: usize, v: u8) {
        let n = self.n;
        self.table[a * n + b] = v;
        self.rowpos[a * n + v as usize] = b as u8;
        self.colpos[b * n + v as usize] = a as u8;
        self.row_used[a] |= 1 << v;
        self.col_used[b] |= 1 << v;
        self.open -= 1;
    }

    #[inline]
    fn at(&self, a: usize, b: usize) -> u8 {
        self.table[a * self.n + b]
    }

    /// Assigns `(a, b) = v` if consistent, queueing the cell for propagation.
    fn set(&mut self, a: usize, b: usize, v: u8, queue: &mut Vec<(u8, u8)>) -> bool {
        let cur = self.at(a, b);
        if cur == v {
            return true;
        }
        if cur != UNSET {
            return false;
        }
        let bit = 1u64 << v;
        if self.row_used[a] & bit != 0 || self.col_used[b] & bit != 0 {
            return false;
        }
        self.put(a, b, v);
        self.mentioned |= (1 << a) | (1 << b) | bit;
        queue.push((a as u8, b as u8));
        true
    }

    /// Makes cells `p` and `q` equal.
    fn unify(&mut self, p: (usize, usize), q: (usize, usize), queue: &mut Vec<(u8, u8)>) -> bool {
        let vp = self.at(p.0, p.1);
        let vq = self.at(q.0, q.1);
        match (vp == UNSET, vq == UNSET) {
            (false, false) => vp == vq,
            (false, true) => self.set(q.0, q.1, vp, queue),
            (true, false) => self.set(p.0, p.1, vq, queue),
            (true, true) => true,
        }
    }

    fn propagate(&mut self, queue: &mut Vec<(u8, u8)>) -> bool {
        let n = self.n;
        while let Some((a, b)) = queue.pop() {
            let (a, b) = (a as usize, b as usize);
            let c = self.at(a, b) as usize;
            for x in 1..n {
                // (x a) b = x (a b)
                let y = self.at(x, a);
                if y != UNSET && !self.unify((y as usize, b), (x, c), queue) {
                    return false;
                }
                // (a b) x = a (b x)
                let e = self.at(b, x);
                if e != UNSET && !self.unify((c, x), (a, e as usize), queue) {
                    return false;
                }
                // x y = a  =>  (x y) b = x (y b)
                let y = self.rowpos[x * n + a];
                if y != UNSET {
                    let y = y as usize;
                    let w = self.at(y, b);
                    if w != UNSET {
                        if !self.set(x, w as usize, c as u8, queue) {
                            return false;
                        }
                    } else {
                        let w = self.rowpos[x * n + c];
                        if w != UNSET && !self.set(y, b, w, queue) {
                            return false;
                        }
                    }
                }
                // x z = b  =>  a (x z) = (a x) z
                let z = self.rowpos[x * n + b];
                if z != UNSET {
                    let z = z as usize;
                    let w = self.at(a, x);
                    if w != UNSET {
                        if !self.set(w as usize, z, c as u8, queue) {
                            return false;
                        }
                    } else {
                        let w = self.colpos[z * n + c];
                        if w != UNSET && !self.set(a, x, w, queue) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every closed power cycle must have length dividing `n`.
    fn lagrange_ok(&self) -> bool {
        let n = self.n;
        for x in 1..n {
            let mut p = x;
            let mut k = 1;
            loop {
                let q = self.at(p, x);
                if q == UNSET {
                    break;
                }
                k += 1;
                p = q as usize;
                if p == 0 {
                    if !n.is_multiple_of(k) {
                        return false;
                    }
                    break;
                }
                if k >= n {
                    return false;
                }
            }
        }
        true
    }

    fn iter_bits(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&k| (mask >> k) & 1 == 1)
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Open cell with the fewest candidates; `None` when the table is full,
    /// `Some(Err)` on a dead cell.
    fn choose_cell(&self) -> Option<Result<(usize, usize, u64), ()>> {
        if self.open == 0 {
            return None;
        }
        let n = self.n;
        let full = self.full_mask();
        let mut best: Option<(usize, usize, u64)> = None;
        let mut best_count = u32::MAX;
        // Prefer cells indexed by labels already in play; only when none is
        // open, bring in the least unseen label.
        let mut rows = self.mentioned & !1 & full;
        if !self
            .iter_bits(rows)
            .any(|a| self.iter_bits(rows).any(|b| self.at(a, b) == UNSET))
        {
            let fresh = full & !self.mentioned;
            rows |= fresh & fresh.wrapping_neg();
        }
        for a in 1..n {
            for b in 1..n {
                if self.at(a, b) != UNSET {
                    continue;
                }
                if (rows >> a) & 1 == 0 || (rows >> b) & 1 == 0 {
                    // Still reject dead cells anywhere.
                    let dom = full & !(self.row_used[a] | self.col_used[b]);
                    if dom == 0 {
                        return Some(Err(()));
                    }
                    continue;
                }
                let dom = full & !(self.row_used[a] | self.col_used[b]);
                let cnt = dom.count_ones();
                if cnt == 0 {
                    return Some(Err(()));
                }
                if cnt < best_count {
                    best_count = cnt;
                    best = Some((a, b, dom));
                    if cnt == 1 {
                        return Some(Ok(best.unwrap()));
                    }
                }
            }
        }
        best.map(Ok)
    }

    /// Children of a node in deterministic order. A node whose table is
    /// complete has no children.
    pub fn children(&self) -> Vec<SearchNode> {
        let mut out = Vec::new();
        let (a, b, dom) = match self.choose_cell() {
            Some(Ok(c)) => c,
            _ => return out,
        };
        let known = self.mentioned | (1 << a) | (1 << b);
        let fresh = dom & !known;
        let mut candidates = dom & known;
        if fresh != 0 {
            candidates |= fresh & fresh.wrapping_neg();
        }
        let mut queue = Vec::new();
        while candidates != 0 {
            let v = candidates.trailing_zeros() as u8;
            candidates &= candidates - 1;
            let mut child = self.clone();
            child.depth += 1;
            queue.clear();
            if child.set(a, b, v, &mut queue) && child.propagate(&mut queue) && child.lagrange_ok()
            {
                out.push(child);
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.open == 0
    }

    fn to_group(&self) -> Result<FiniteGroup, GroupError> {
        let table: Vec<Elem> = self.table.iter().map(|&v| Elem::from(v)).collect();
        FiniteGroup::from_flat(self.n, table)
    }
}

/// Statistics of one subtree exploration.
#[derive(Debug, Clone, Default)]
pub struct SubtreeOutcome {
    pub tables: Vec<FiniteGroup>,
    pub nodes: u64,
    pub interrupted: bool,
}

/// Depth-first exploration below `node`. `interrupt` is polled every few
/// thousand nodes; returning `true` stops the walk.
pub fn explore_subtree(
    node: SearchNode,
    node_budget: Option<u64>,
    interrupt: &mut dyn FnMut() -> bool,
) -> Result<SubtreeOutcome, EnumerateError> {
    let mut out = SubtreeOutcome::default();
    let mut stack = vec![node];
    while let Some(cur) = stack.pop() {
        out.nodes += 1;
        if out.nodes % 4096 == 0 && interrupt() {
            out.interrupted = true;
            return Ok(out);
        }
        if node_budget.is_some_and(|b| out.nodes > b) {
            out.interrupted = true;
            return Ok(out);
        }
        if cur.is_complete() {
            out.tables
                .push(cur.to_group().map_err(EnumerateError::InvalidTable)?);
            continue;
        }
        let mut kids = cur.children();
        kids.reverse();
        stack.extend(kids);
    }
    Ok(out)
}

/// Expands the root to depth [`FRONTIER_DEPTH`]. Returns the frontier, the
/// complete tables found above it, and the number of interior nodes visited.
pub fn frontier(n: usize) -> Result<(Vec<SearchNode>, Vec<FiniteGroup>, u64), EnumerateError> {
    let mut level = vec![SearchNode::root(n)];
    let mut done = Vec::new();
    let mut nodes = 0;
    for _ in 0..FRONTIER_DEPTH {
        let mut next = Vec::new();
        for node in level {
            if node.is_complete() {
                next.push(node);
                continue;
            }
            nodes += 1;
            next.extend(node.children());
        }
        level = next;
    }
    let (complete, open): (Vec<_>, Vec<_>) = level.into_iter().partition(|s| s.is_complete());
    for s in complete {
        done.push(s.to_group().map_err(EnumerateError::InvalidTable)?);
    }
    // Count complete nodes where explore_subtree would have.
    nodes += done.len() as u64;
    Ok((open, done, nodes))
}

/// Iso-class accumulator with deterministic representatives.
#[derive(Debug, Default, Clone)]
pub struct ClassCollector {
    buckets: BTreeMap<IsoFingerprint, Vec<FiniteGroup>>,
    seen: u64,
}

impl ClassCollector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, g: FiniteGroup) {
        self.seen += 1;
        let bucket = self.buckets.entry(fingerprint(&g)).or_default();
        for rep in bucket.iter_mut() {
            if isomorphism_unfiltered(&g, rep).is_some() {
                if g.table() < rep.table() {
                    *rep = g;
                }
                return;
            }
        }
        bucket.push(g);
    }

    pub fn class_count(&self) -> usize {
        self.buckets.values().map(Vec::len).sum()
    }

    pub fn tables_seen(&self) -> u64 {
        self.seen
    }

    /// Representatives sorted by fingerprint, then table; named from
    /// `catalog` where possible.
    pub fn finish(self, catalog: Option<&Catalog>) -> Vec<FiniteGroup> {
        let mut out = Vec::new();
        for (_, mut reps) in self.buckets {
            reps.sort_by(|a, b| a.table().cmp(b.table()));
            out.extend(reps);
        }
        if let Some(cat) = catalog {
            for g in &mut out {
                if let Some(name) = cat.identify(g) {
                    let name = alloc::string::String::from(name);
                    g.set_name(name);
                }
            }
        }
        out
    }
}

fn check_order(n: usize, config: &EnumerationConfig) -> Result<(), EnumerateError> {
    let cap = config.cap.min(MAX_ENUM_ORDER);
    if n == 0 || n > cap {
        return Err(EnumerateError::OrderOutOfRange { order: n, cap });
    }
    Ok(())
}

/// Single-threaded enumeration of all groups of order `n`.
pub fn enumerate_groups(
    n: usize,
    config: &EnumerationConfig,
) -> Result<EnumerationResult, EnumerateError> {
    enumerate_groups_with(n, config, &mut || false)
}

pub fn enumerate_groups_with(
    n: usize,
    config: &EnumerationConfig,
    interrupt: &mut dyn FnMut() -> bool,
) -> Result<EnumerationResult, EnumerateError> {
    check_order(n, config)?;
    let catalog = Catalog::standard();
    let (nodes, done, mut explored) = frontier(n)?;
    let mut collector = ClassCollector::new();
    for g in done {
        collector.insert(g);
    }
    for node in nodes {
        let budget = config.node_limit.map(|l| l.saturating_sub(explored));
        let sub = explore_subtree(node, budget, interrupt)?;
        explored += sub.nodes;
        for g in sub.tables {
            collector.insert(g);
        }
        if sub.interrupted {
            return Err(EnumerateError::Interrupted {
                order: n,
                tables_explored: explored,
                complete_tables: collector.tables_seen(),
                classes_so_far: collector.class_count(),
            });
        }
    }
    let complete_tables = collector.tables_seen();
    Ok(EnumerationResult {
        order: n,
        groups: collector.finish(Some(&catalog)),
        tables_explored: explored,
        complete_tables,
        elapsed: None,
    })
}
