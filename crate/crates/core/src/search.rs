//! Depth-first enumeration over class multisets with incremental
//! feasibility tables.
//!
//! Both constants and catalogs reduce to walking multisets of term classes
//! in nondecreasing class order (each multiset visited once). The walk keeps
//! one feasibility frame per depth so that pushing a term is a row copy plus
//! one DP transition, and popping is free.

use std::time::{Duration, Instant};

use crate::bitset::SumSet;
use crate::error::{Error, Result};

/// Search ceilings. Node and wall-clock limits end a search with an explicit
/// error; they never silently truncate results.
#[derive(Debug, Clone)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
    /// Largest n accepted by the Gao-constant search.
    pub gao_n_ceiling: u64,
    /// Largest n accepted by the Davenport-constant search.
    pub davenport_n_ceiling: u64,
    /// Extra depth explored beyond the longest length any known bound
    /// allows; reaching the cap with live branches is reported, since it
    /// would mean a sequence those bounds rule out.
    pub depth_slack: usize,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_nodes: 1_000_000_000,
            max_time: None,
            gao_n_ceiling: 60,
            davenport_n_ceiling: 120,
            depth_slack: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

pub(crate) struct Budgeted {
    max_nodes: u64,
    deadline: Option<Instant>,
    started: Instant,
    nodes: u64,
}

impl Budgeted {
    pub(crate) fn new(budget: &Budget) -> Budgeted {
        let started = Instant::now();
        Budgeted {
            max_nodes: budget.max_nodes,
            deadline: budget.max_time.map(|t| started + t),
            started,
            nodes: 0,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted {
                nodes: self.nodes,
                elapsed: self.started.elapsed(),
            });
        }
        if self.nodes % 16384 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    return Err(Error::BudgetExhausted {
                        nodes: self.nodes,
                        elapsed: self.started.elapsed(),
                    });
                }
            }
        }
        Ok(())
    }

    pub(crate) fn stats(&self) -> SearchStats {
        SearchStats {
            nodes: self.nodes,
            elapsed: self.started.elapsed(),
        }
    }
}

/// One term class: a representative residue plus its reachable sums.
pub(crate) type ClassAlphabet = Vec<(u64, Vec<u64>)>;

struct GaoFrame {
    /// rows[c] = sums achievable over exactly c chosen terms.
    rows: Vec<SumSet>,
    /// Bit c set iff rows[c] contains 0, i.e. the multiset so far has a
    /// zero-sum selection of size exactly c.
    zero_lens: u128,
}

/// Walk all nondecreasing multisets over `alphabet` up to length `cap`,
/// pruning any branch whose multiset already contains a zero-sum selection
/// of size exactly n (supersets keep it, so nothing extremal lies below).
///
/// `visit` sees every surviving node as (class stack, zero-length mask).
/// Returns whether some live branch hit the depth cap.
pub(crate) fn gao_profile_search<F>(
    n: u64,
    alphabet: &ClassAlphabet,
    cap: usize,
    tracker: &mut Budgeted,
    visit: F,
) -> Result<bool>
where
    F: FnMut(&[u64], u128),
{
    assert!(n < 128, "zero-length mask is 128 bits wide");
    if n <= 64 {
        gao_profile_search_word(n, alphabet, cap, tracker, visit)
    } else {
        gao_profile_search_wide(n, alphabet, cap, tracker, visit)
    }
}

/// Fast path: each feasibility row fits one machine word. Frames live in a
/// flat array; a push is a single sweep that both copies and extends the
/// parent rows. Rows above the current depth of a frame are never written,
/// so they stay at their initial empty value, which is exactly the row a
/// child transition needs to read there.
fn gao_profile_search_word<F>(
    n: u64,
    alphabet: &ClassAlphabet,
    cap: usize,
    tracker: &mut Budgeted,
    mut visit: F,
) -> Result<bool>
where
    F: FnMut(&[u64], u128),
{
    let nb = n as usize;
    let shift = n as u32;
    let mask: u64 = if nb == 64 { u64::MAX } else { (1u64 << nb) - 1 };
    let num_rows = cap.min(nb) + 1;
    let mut frames: Vec<u64> = vec![0u64; (cap + 1) * num_rows];
    frames[0] = 1;
    let mut zmasks: Vec<u128> = vec![0; cap + 1];

    let mut stack: Vec<u64> = Vec::with_capacity(cap);
    let mut next_class: Vec<usize> = vec![0; cap + 1];
    let mut cap_hit = false;

    tracker.tick()?;
    visit(&stack, 0);
    if cap == 0 {
        return Ok(true);
    }

    let mut depth = 0usize;
    loop {
        let class_idx = next_class[depth];
        if class_idx == alphabet.len() || depth == cap {
            if depth == 0 {
                break;
            }
            stack.pop();
            depth -= 1;
            continue;
        }
        next_class[depth] += 1;
        tracker.tick()?;

        let child_depth = depth + 1;
        let (lo, hi) = frames.split_at_mut(child_depth * num_rows);
        let src = &lo[depth * num_rows..][..num_rows];
        let dst = &mut hi[..num_rows];
        let orbit = &alphabet[class_idx].1;
        let mut z = zmasks[depth];
        dst[0] = src[0];
        for c in (0..=depth.min(nb - 1)).rev() {
            let w = src[c];
            let mut acc = src[c + 1];
            if w != 0 {
                for &o in orbit {
                    let o = o as u32;
                    acc |= if o == 0 {
                        w
                    } else {
                        ((w << o) | (w >> (shift - o))) & mask
                    };
                }
            }
            dst[c + 1] = acc;
            if acc & 1 != 0 {
                z |= 1u128 << (c + 1);
            }
        }
        zmasks[child_depth] = z;

        if child_depth >= nb && z >> nb & 1 == 1 {
            continue;
        }

        stack.push(alphabet[class_idx].0);
        depth = child_depth;
        next_class[depth] = class_idx;
        visit(&stack, z);
        if depth == cap {
            cap_hit = true;
        }
    }
    Ok(cap_hit)
}

/// General path for n > 64: rows are multi-word bitsets.
fn gao_profile_search_wide<F>(
    n: u64,
    alphabet: &ClassAlphabet,
    cap: usize,
    tracker: &mut Budgeted,
    mut visit: F,
) -> Result<bool>
where
    F: FnMut(&[u64], u128),
{
    let n = n as usize;
    let num_rows = cap.min(n) + 1;
    let mut frames: Vec<GaoFrame> = (0..=cap)
        .map(|_| GaoFrame {
            rows: (0..num_rows).map(|_| SumSet::empty(n)).collect(),
            zero_lens: 0,
        })
        .collect();
    frames[0].rows[0].insert(0);

    let mut stack: Vec<u64> = Vec::with_capacity(cap);
    let mut next_class: Vec<usize> = vec![0; cap + 1];
    let mut cap_hit = false;

    tracker.tick()?;
    visit(&stack, 0);
    if cap == 0 {
        return Ok(true);
    }

    let mut depth = 0usize;
    loop {
        let class_idx = next_class[depth];
        if class_idx == alphabet.len() || depth == cap {
            if depth == 0 {
                break;
            }
            stack.pop();
            depth -= 1;
            continue;
        }
        next_class[depth] += 1;
        tracker.tick()?;

        let child_depth = depth + 1;
        let (lo, hi) = frames.split_at_mut(child_depth);
        let src = &lo[depth];
        let dst = &mut hi[0];
        let top_row = child_depth.min(n);
        for c in 0..=top_row {
            dst.rows[c].clone_from_set(&src.rows[c]);
        }
        let orbit = &alphabet[class_idx].1;
        for c in (0..=depth.min(n - 1)).rev() {
            let (r_lo, r_hi) = dst.rows.split_at_mut(c + 1);
            for &o in orbit {
                r_hi[0].or_rotated(&r_lo[c], o as usize);
            }
        }
        dst.zero_lens = src.zero_lens;
        for c in 1..=top_row {
            if dst.rows[c].contains(0) {
                dst.zero_lens |= 1u128 << c;
            }
        }

        if child_depth >= n && dst.zero_lens >> n & 1 == 1 {
            continue; // pruned: a zero-sum selection of size n exists
        }

        stack.push(alphabet[class_idx].0);
        let zero_lens = dst.zero_lens;
        depth = child_depth;
        next_class[depth] = class_idx;
        visit(&stack, zero_lens);
        if depth == cap {
            cap_hit = true;
        }
    }
    Ok(cap_hit)
}

/// Walk all nondecreasing multisets over `alphabet` up to length `cap`,
/// pruning any branch with a zero-sum selection of any size. Surviving
/// nodes are exactly the weighted-zero-sum-free class multisets.
pub(crate) fn davenport_profile_search<F>(
    n: u64,
    alphabet: &ClassAlphabet,
    cap: usize,
    tracker: &mut Budgeted,
    mut visit: F,
) -> Result<bool>
where
    F: FnMut(&[u64]),
{
    let n = n as usize;
    let mut frames: Vec<SumSet> = (0..=cap).map(|_| SumSet::empty(n)).collect();
    let mut stack: Vec<u64> = Vec::with_capacity(cap);
    let mut next_class: Vec<usize> = vec![0; cap + 1];
    let mut cap_hit = false;

    tracker.tick()?;
    visit(&stack);
    if cap == 0 {
        return Ok(true);
    }

    let mut depth = 0usize;
    loop {
        let class_idx = next_class[depth];
        if class_idx == alphabet.len() || depth == cap {
            if depth == 0 {
                break;
            }
            stack.pop();
            depth -= 1;
            continue;
        }
        next_class[depth] += 1;
        tracker.tick()?;

        let child_depth = depth + 1;
        let (lo, hi) = frames.split_at_mut(child_depth);
        let src = &lo[depth];
        let dst = &mut hi[0];
        dst.clone_from_set(src);
        for &o in &alphabet[class_idx].1 {
            dst.insert(o as usize);
            dst.or_rotated(src, o as usize);
        }
        if dst.contains(0) {
            continue;
        }

        stack.push(alphabet[class_idx].0);
        depth = child_depth;
        next_class[depth] = class_idx;
        visit(&stack);
        if depth == cap {
            cap_hit = true;
        }
    }
    Ok(cap_hit)
}
