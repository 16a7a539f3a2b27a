//! Adaptive adversaries playing against an online scheduler.
//!
//! The engine asks the adversary for `p_j` at the exact moment the lookahead
//! model first reveals it (when job `j - k` arrives), passing only the history
//! visible at that time. A value once revealed is never changed.

use crate::algorithms::{check_lookahead, OnlineScheduler};
use crate::error::{Error, Result};
use crate::model::{Instance, LookaheadWindow, Schedule};
use crate::oracle::{competitive_ratio, optimal_makespan};
use crate::rational::Rational;

use super::families::Thm4Case;

/// What the adversary may look at when committing a value.
#[derive(Debug, Clone, Copy)]
pub struct GameView<'a> {
    /// Loads after every job placed so far.
    pub loads: &'a [Rational],
    /// 1-based machines of the jobs placed so far.
    pub decisions: &'a [usize],
    /// Values already committed.
    pub committed: &'a [Rational],
}

pub trait Adversary {
    /// Total number of jobs the adversary will emit.
    fn length(&self) -> usize;

    /// Commits `p_job` (1-based). Called exactly once per job, in order.
    fn commit(&mut self, job: usize, view: GameView<'_>) -> Rational;

    /// Which branch of the construction was taken, if any.
    fn label(&self) -> Option<String> {
        None
    }

    /// Set when the construction had to clamp a value.
    fn degenerate(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameTranscript {
    pub machines: usize,
    pub lookahead: usize,
    pub revealed: Vec<LookaheadWindow>,
    pub decisions: Vec<usize>,
    pub final_instance: Instance,
    pub alg_makespan: Rational,
    pub opt_makespan: Rational,
    pub ratio: Rational,
    pub label: Option<String>,
    pub degenerate: bool,
}

impl GameTranscript {
    /// Re-checks the transcript invariants: replay reproduces the makespan, the
    /// ratio is consistent, and every revealed value matches the final instance.
    pub fn is_sound(&self) -> bool {
        let Ok(replay) = Schedule::new(&self.final_instance, self.machines, self.decisions.clone()) else {
            return false;
        };
        if replay.makespan() != &self.alg_makespan {
            return false;
        }
        if self.opt_makespan.is_zero() || &self.alg_makespan / &self.opt_makespan != self.ratio {
            return false;
        }
        let times = self.final_instance.processing_times();
        self.revealed.len() == times.len()
            && self.revealed.iter().all(|w| {
                times.get(w.index - 1) == Some(&w.current)
                    && w.future.iter().enumerate().all(|(o, v)| times.get(w.index + o) == Some(v))
            })
    }
}

pub fn play(
    adversary: &mut dyn Adversary,
    scheduler: &dyn OnlineScheduler,
    k: usize,
) -> Result<GameTranscript> {
    check_lookahead(scheduler, k)?;
    let n = adversary.length();
    if n == 0 {
        return Err(Error::EmptyInstance);
    }
    let m = scheduler.machines();
    let mut loads = vec![Rational::zero(); m];
    let mut committed: Vec<Rational> = Vec::with_capacity(n);
    let mut decisions = Vec::with_capacity(n);
    let mut revealed = Vec::with_capacity(n);

    for i in 1..=n {
        let horizon = n.min(i + k);
        while committed.len() < horizon {
            let job = committed.len() + 1;
            let value = adversary.commit(
                job,
                GameView {
                    loads: &loads,
                    decisions: &decisions,
                    committed: &committed,
                },
            );
            if !value.is_positive() {
                return Err(Error::NonPositiveTime(job));
            }
            committed.push(value);
        }
        let window = LookaheadWindow {
            index: i,
            current: committed[i - 1].clone(),
            future: committed[i..horizon].to_vec(),
            is_last: i == n,
        };
        let machine = scheduler.decide(&loads, &window);
        if machine == 0 || machine > m {
            return Err(Error::InvalidDecision { machine, machines: m });
        }
        loads[machine - 1] += &window.current;
        decisions.push(machine);
        revealed.push(window);
    }

    let final_instance = Instance::new(committed)?;
    let alg_makespan = loads.iter().max().cloned().unwrap_or_default();
    let opt_makespan = optimal_makespan(&final_instance, m)?.makespan;
    let ratio = competitive_ratio(&alg_makespan, &opt_makespan)?;
    Ok(GameTranscript {
        machines: m,
        lookahead: k,
        revealed,
        decisions,
        final_instance,
        alg_makespan,
        opt_makespan,
        ratio,
        label: adversary.label(),
        degenerate: adversary.degenerate(),
    })
}

/// Two-machine construction: `x` for the first `n - k - 1` jobs, then `k` unit
/// jobs, then a final job `y` fixed when it first becomes visible.
#[derive(Debug, Clone)]
pub struct Theorem1Adversary {
    n: usize,
    k: usize,
    x: Rational,
    case: Option<&'static str>,
    degenerate: bool,
}

impl Theorem1Adversary {
    pub fn new(n: usize, k: usize, x: Rational) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParam("lookahead k must be >= 1".into()));
        }
        if n < k + 2 {
            return Err(Error::InvalidParam(format!("need n >= k + 2, got n = {n}, k = {k}")));
        }
        if !x.is_positive() {
            return Err(Error::InvalidParam("x must be positive".into()));
        }
        Ok(Theorem1Adversary {
            n,
            k,
            x,
            case: None,
            degenerate: false,
        })
    }
}

impl Adversary for Theorem1Adversary {
    fn length(&self) -> usize {
        self.n
    }

    fn commit(&mut self, job: usize, view: GameView<'_>) -> Rational {
        if job < self.n - self.k {
            return self.x.clone();
        }
        if job < self.n {
            return Rational::one();
        }
        // loads of jobs 1..n-k-1, relabelled so that heavy >= light
        let heavy = view.loads.iter().max().cloned().unwrap_or_default();
        let light = view.loads.iter().min().cloned().unwrap_or_default();
        if heavy >= Rational::from(2) * &light {
            self.case = Some("case 1");
            Rational::from(self.k)
        } else {
            self.case = Some("case 2");
            let y = Rational::from(2) * heavy - light;
            if y.is_positive() {
                y
            } else {
                self.degenerate = true;
                Rational::one()
            }
        }
    }

    fn label(&self) -> Option<String> {
        self.case.map(str::to_string)
    }

    fn degenerate(&self) -> bool {
        self.degenerate
    }
}

pub fn play_theorem1(
    scheduler: &dyn OnlineScheduler,
    n: usize,
    k: usize,
    x: Rational,
) -> Result<GameTranscript> {
    if scheduler.machines() != 2 {
        return Err(Error::SchedulerMachineMismatch {
            scheduler: scheduler.name(),
            machines: scheduler.machines(),
        });
    }
    let mut adversary = Theorem1Adversary::new(n, k, x)?;
    play(&mut adversary, scheduler, k)
}

/// Three-machine construction with prefix `7, 4, 4` and a tail chosen from the
/// case tree using only placements visible at commitment time.
///
/// `p4` is committed when J3 arrives, so only J1 and J2 are placed; every
/// reachable branch uses `p4 = 7`. `p5` is committed when J4 arrives and
/// depends on where J1..J3 went:
///
/// | J1, J2 | J3 | case | p5 |
/// |---|---|---|---|
/// | same machine | same machine | 1 | 11 |
/// | same machine | other machine | 2.1 | 11 |
/// | different | with J1 | 3a.1 | 11 |
/// | different | with J2 | 3b.1 | 8 |
/// | different | third machine | 1 | 11 |
///
/// Cases 2.2, 2.3, 3a.2, 3a.3 and 3b.2 pick `p4` from J4's placement, which is
/// not known when `p4` must be revealed, so this adversary never plays them.
#[derive(Debug, Clone, Default)]
pub struct Theorem4Adversary {
    case: Option<Thm4Case>,
}

impl Theorem4Adversary {
    pub fn case(&self) -> Option<Thm4Case> {
        self.case
    }

    fn classify(decisions: &[usize]) -> Thm4Case {
        let (a, b, c) = (decisions[0], decisions[1], decisions[2]);
        if a == b {
            if c == a {
                Thm4Case::C1
            } else {
                Thm4Case::C2_1
            }
        } else if c == a {
            Thm4Case::C3a1
        } else if c == b {
            Thm4Case::C3b1
        } else {
            Thm4Case::C1
        }
    }
}

impl Adversary for Theorem4Adversary {
    fn length(&self) -> usize {
        5
    }

    fn commit(&mut self, job: usize, view: GameView<'_>) -> Rational {
        let v = match job {
            1 => 7,
            2 | 3 => 4,
            4 => 7,
            _ => {
                let case = Self::classify(view.decisions);
                self.case = Some(case);
                case.tail().1
            }
        };
        Rational::from(v)
    }

    fn label(&self) -> Option<String> {
        self.case.map(|c| format!("case {c}"))
    }
}

pub fn play_theorem4(scheduler: &dyn OnlineScheduler) -> Result<GameTranscript> {
    if scheduler.machines() != 3 {
        return Err(Error::SchedulerMachineMismatch {
            scheduler: scheduler.name(),
            machines: scheduler.machines(),
        });
    }
    play(&mut Theorem4Adversary::default(), scheduler, 1)
}
