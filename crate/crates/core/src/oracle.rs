//! Exact optimal offline makespan.
//!
//! Processing times are scaled by the LCM of their denominators so the search
//! runs on integers. Two machines use a reachable-subset-sum table, three
//! machines a dynamic program over reachable load pairs, and anything else
//! (or anything too large for the tables) falls back to brute-force
//! enumeration of all `m^n` assignments when that is small enough.
//!
//! All paths return the lexicographically smallest optimal assignment, so the
//! table-based and brute-force answers can be compared witness for witness.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::model::Instance;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptResult {
    pub makespan: Rational,
    /// `witness[j - 1]` is the 1-based machine of job `j`.
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Upper bound on the scaled total processing time for the table-based paths.
    pub max_scaled_total: u64,
    /// Largest `n` handed to brute force.
    pub max_exhaustive_jobs: usize,
    /// Largest `m^n` handed to brute force.
    pub max_exhaustive_leaves: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_scaled_total: 20_000,
            max_exhaustive_jobs: 12,
            max_exhaustive_leaves: 1 << 26,
        }
    }
}

/// `max(p_max, T / m)`.
pub fn opt_lower_bound(instance: &Instance, m: usize) -> Rational {
    let avg = instance.total() / Rational::from(m);
    instance.max_time().clone().max(avg)
}

/// `alg / opt`, with no additive slack.
pub fn competitive_ratio(alg_makespan: &Rational, opt_makespan: &Rational) -> Result<Rational> {
    if opt_makespan.is_zero() {
        return Err(Error::ZeroOpt);
    }
    Ok(alg_makespan / opt_makespan)
}

pub fn optimal_makespan(instance: &Instance, m: usize) -> Result<OptResult> {
    optimal_makespan_with(instance, m, &OracleConfig::default())
}

pub fn optimal_makespan_with(instance: &Instance, m: usize, config: &OracleConfig) -> Result<OptResult> {
    if m < 2 {
        return Err(Error::InvalidParam(format!("need at least 2 machines, got {m}")));
    }
    let (scaled, factor) = scale_to_integers(instance);
    let total: BigInt = scaled.iter().sum();
    let fits = total
        .to_u64()
        .is_some_and(|t| t <= config.max_scaled_total);

    if fits && (m == 2 || m == 3) {
        let weights: Vec<usize> = scaled.iter().map(|w| w.to_usize().unwrap()).collect();
        let (best, witness) = if m == 2 {
            two_machine_table(&weights)
        } else {
            three_machine_table(&weights)
        };
        return Ok(OptResult {
            makespan: Rational::new(best, factor),
            witness,
        });
    }

    if exhaustive_allowed(instance.len(), m, config) {
        return exhaustive_optimal(instance, m);
    }

    Err(Error::CapacityExceeded {
        reason: format!(
            "scaled total {total} exceeds {} and {} jobs on {m} machines is too many to enumerate",
            config.max_scaled_total,
            instance.len()
        ),
        instance: Some(instance.clone()),
    })
}

fn exhaustive_allowed(n: usize, m: usize, config: &OracleConfig) -> bool {
    if n > config.max_exhaustive_jobs {
        return false;
    }
    (m as u64)
        .checked_pow(n as u32)
        .is_some_and(|leaves| leaves <= config.max_exhaustive_leaves)
}

/// Integer weights `p_i · L` where `L` is the LCM of all denominators.
fn scale_to_integers(instance: &Instance) -> (Vec<BigInt>, BigInt) {
    let lcm = instance
        .processing_times()
        .iter()
        .fold(BigInt::one(), |acc, p| acc.lcm(p.denominator()));
    let scaled = instance
        .processing_times()
        .iter()
        .map(|p| p.numerator() * (&lcm / p.denominator()))
        .collect();
    (scaled, lcm)
}

struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    fn new(bits: usize) -> Self {
        BitRow {
            words: vec![0; bits / 64 + 1],
        }
    }

    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `self | (self << shift)`, truncated to the row width.
    fn or_shifted(&self, shift: usize) -> Self {
        let mut out = self.words.clone();
        let (whole, part) = (shift / 64, shift % 64);
        for dst in (whole..out.len()).rev() {
            let src = dst - whole;
            let mut v = self.words[src] << part;
            if part != 0 && src > 0 {
                v |= self.words[src - 1] >> (64 - part);
            }
            out[dst] |= v;
        }
        BitRow { words: out }
    }

    fn any_in(&self, lo: usize, hi: usize) -> bool {
        (lo..=hi).any(|i| self.get(i))
    }
}

/// Subset sums of the suffix `weights[i..]` for every `i`; the best split
/// balances the machines and the witness is read off greedily, preferring M1.
fn two_machine_table(weights: &[usize]) -> (usize, Vec<usize>) {
    let n = weights.len();
    let total: usize = weights.iter().sum();
    let mut suffix = Vec::with_capacity(n + 1);
    let mut row = BitRow::new(total);
    row.set(0);
    suffix.push(row);
    for &w in weights.iter().rev() {
        let next = suffix.last().unwrap().or_shifted(w);
        suffix.push(next);
    }
    suffix.reverse();

    let best = (0..=total)
        .filter(|&s| suffix[0].get(s))
        .map(|s| s.max(total - s))
        .min()
        .expect("0 is always reachable");

    let floor = total - best;
    let mut witness = Vec::with_capacity(n);
    let mut l1 = 0;
    for (i, &w) in weights.iter().enumerate() {
        let with = l1 + w;
        // final M1 load must land in [total - best, best]
        let ok = with <= best && suffix[i + 1].any_in(floor.saturating_sub(with), best - with);
        if ok {
            l1 = with;
            witness.push(1);
        } else {
            witness.push(2);
        }
    }
    (best, witness)
}

/// Greedy list scheduling on integers; only used as an upper bound for pruning.
fn list_schedule_bound(weights: &[usize], m: usize) -> usize {
    let mut loads = vec![0; m];
    for &w in weights {
        let j = (0..m).min_by_key(|&j| loads[j]).unwrap();
        loads[j] += w;
    }
    loads.into_iter().max().unwrap_or(0)
}

fn three_machine_table(weights: &[usize]) -> (usize, Vec<usize>) {
    let upper = list_schedule_bound(weights, 3);
    // canonical states: sorted loads a >= b >= c, stored as (a, b)
    let mut states: HashSet<(usize, usize)> = HashSet::from([(0, 0)]);
    let mut prefix = 0;
    for &w in weights {
        let mut next = HashSet::with_capacity(states.len() * 2);
        for &(a, b) in &states {
            let c = prefix - a - b;
            for loads in [[a + w, b, c], [a, b + w, c], [a, b, c + w]] {
                let mut sorted = loads;
                sorted.sort_unstable_by(|x, y| y.cmp(x));
                if sorted[0] <= upper {
                    next.insert((sorted[0], sorted[1]));
                }
            }
        }
        prefix += w;
        states = next;
    }
    let best = states.iter().map(|&(a, _)| a).min().unwrap_or(0);
    let witness = lexicographic_witness(weights, 3, best)
        .expect("a schedule with the optimal makespan exists");
    (best, witness)
}

/// Depth-first search for the lexicographically smallest assignment whose
/// makespan is at most `bound`. Dead states `(depth, loads)` are memoised.
fn lexicographic_witness(weights: &[usize], m: usize, bound: usize) -> Option<Vec<usize>> {
    let n = weights.len();
    let mut remaining: Vec<usize> = vec![0; n + 1];
    for i in (0..n).rev() {
        remaining[i] = remaining[i + 1] + weights[i];
    }
    let mut dead: HashSet<(usize, Vec<usize>)> = HashSet::new();
    let mut loads = vec![0; m];
    let mut choice = vec![0usize; n];
    let mut depth = 0;
    loop {
        if depth == n {
            return Some(choice);
        }
        let w = weights[depth];
        let mut advanced = false;
        while choice[depth] < m {
            choice[depth] += 1;
            let j = choice[depth] - 1;
            if loads[j] + w > bound {
                continue;
            }
            loads[j] += w;
            let slack: usize = loads.iter().map(|l| bound - l).sum();
            if slack >= remaining[depth + 1] && !dead.contains(&(depth + 1, loads.clone())) {
                advanced = true;
                break;
            }
            loads[j] -= w;
        }
        if advanced {
            depth += 1;
            if depth < n {
                choice[depth] = 0;
            }
            continue;
        }
        dead.insert((depth, loads.clone()));
        choice[depth] = 0;
        if depth == 0 {
            return None;
        }
        depth -= 1;
        loads[choice[depth] - 1] -= weights[depth];
    }
}

/// Brute force over all `m^n` assignments in lexicographic order. Independent
/// of the table-based paths; used as their reference.
pub fn exhaustive_optimal(instance: &Instance, m: usize) -> Result<OptResult> {
    if m < 1 {
        return Err(Error::InvalidParam("need at least one machine".into()));
    }
    let times = instance.processing_times();
    let denominators = times.iter().map(|p| p.denominator().clone());
    let common = denominators.fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let mut weights = Vec::with_capacity(times.len());
    for p in times {
        let w = (p.numerator() * &common / p.denominator()).to_u128();
        weights.push(w.ok_or_else(|| Error::CapacityExceeded {
            reason: "scaled processing time does not fit in 128 bits".into(),
            instance: Some(instance.clone()),
        })?);
    }
    let total: u128 = weights
        .iter()
        .try_fold(0u128, |acc, &w| acc.checked_add(w))
        .ok_or_else(|| Error::CapacityExceeded {
            reason: "scaled total does not fit in 128 bits".into(),
            instance: Some(instance.clone()),
        })?;

    struct Search<'a> {
        weights: &'a [u128],
        loads: Vec<u128>,
        current: Vec<usize>,
        best: u128,
        best_assignment: Vec<usize>,
    }

    impl Search<'_> {
        fn go(&mut self, i: usize) {
            if i == self.weights.len() {
                let makespan = *self.loads.iter().max().unwrap();
                if makespan < self.best {
                    self.best = makespan;
                    self.best_assignment = self.current.clone();
                }
                return;
            }
            for j in 0..self.loads.len() {
                self.loads[j] += self.weights[i];
                self.current.push(j + 1);
                self.go(i + 1);
                self.current.pop();
                self.loads[j] -= self.weights[i];
            }
        }
    }

    let mut search = Search {
        weights: &weights,
        loads: vec![0; m],
        current: Vec::with_capacity(weights.len()),
        best: total + 1,
        best_assignment: Vec::new(),
    };
    search.go(0);
    Ok(OptResult {
        makespan: Rational::new(BigInt::from(search.best), common),
        witness: search.best_assignment,
    })
}
