//! Online and semi-online scheduling policies.
//!
//! Every policy implements [`OnlineScheduler`]: it is handed the current machine
//! loads and the [`LookaheadWindow`] for the arriving job and answers with a
//! 1-based machine number. The driver [`run_online`] owns the instance and
//! builds windows, so a policy physically cannot see beyond its lookahead.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{lookahead_window, Instance, LookaheadWindow, Schedule};
use crate::rational::Rational;

pub trait OnlineScheduler: Send + Sync {
    fn name(&self) -> String;

    fn machines(&self) -> usize;

    /// Smallest k the policy needs in order to make its decisions.
    fn min_lookahead(&self) -> usize;

    /// Picks the machine (1-based) for `window.current` given the loads so far.
    fn decide(&self, loads: &[Rational], window: &LookaheadWindow) -> usize;
}

/// Lowest-numbered machine among the least loaded ones (1-based).
pub fn least_loaded(loads: &[Rational]) -> usize {
    let mut best = 0;
    for (j, l) in loads.iter().enumerate().skip(1) {
        if l < &loads[best] {
            best = j;
        }
    }
    best + 1
}

/// Graham's List Scheduling: always the least loaded machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ListScheduling {
    machines: usize,
}

impl ListScheduling {
    pub fn new(machines: usize) -> Result<Self> {
        if machines < 2 {
            return Err(Error::SchedulerMachineMismatch {
                scheduler: SchedulerId::Ls.to_string(),
                machines,
            });
        }
        Ok(ListScheduling { machines })
    }
}

impl OnlineScheduler for ListScheduling {
    fn name(&self) -> String {
        SchedulerId::Ls.to_string()
    }

    fn machines(&self) -> usize {
        self.machines
    }

    fn min_lookahead(&self) -> usize {
        0
    }

    fn decide(&self, loads: &[Rational], _window: &LookaheadWindow) -> usize {
        least_loaded(loads)
    }
}

/// `3·(l1 + p) <= 2·(l1 + l2 + p + next)`, i.e. M1 stays within two thirds of the
/// load known after the next job.
pub fn two_la1_admit(l1: &Rational, l2: &Rational, p: &Rational, next: &Rational) -> bool {
    let lhs = Rational::from(3) * (l1 + p);
    let rhs = Rational::from(2) * (l1 + l2 + p + next);
    lhs <= rhs
}

/// Two machines, one job of lookahead.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TwoLa1;

impl OnlineScheduler for TwoLa1 {
    fn name(&self) -> String {
        SchedulerId::TwoLa1.to_string()
    }

    fn machines(&self) -> usize {
        2
    }

    fn min_lookahead(&self) -> usize {
        1
    }

    fn decide(&self, loads: &[Rational], window: &LookaheadWindow) -> usize {
        match window.next() {
            Some(next) if !window.is_last => {
                if two_la1_admit(&loads[0], &loads[1], &window.current, next) {
                    1
                } else {
                    2
                }
            }
            _ => least_loaded(loads),
        }
    }
}

/// Machine chosen by the three-machine admission rule:
/// M1 if `33·(l1 + p) <= 16·S`, else M2 if `33·(l2 + p) <= 15·S`, else M3,
/// where `S = l1 + l2 + l3 + p + next`.
pub fn three_la1_admit(
    l1: &Rational,
    l2: &Rational,
    l3: &Rational,
    p: &Rational,
    next: &Rational,
) -> usize {
    let known = l1 + l2 + l3 + p + next;
    let thirty_three = Rational::from(33);
    if &thirty_three * (l1 + p) <= Rational::from(16) * &known {
        1
    } else if &thirty_three * (l2 + p) <= Rational::from(15) * &known {
        2
    } else {
        3
    }
}

/// Three machines, one job of lookahead.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ThreeLa1;

impl OnlineScheduler for ThreeLa1 {
    fn name(&self) -> String {
        SchedulerId::ThreeLa1.to_string()
    }

    fn machines(&self) -> usize {
        3
    }

    fn min_lookahead(&self) -> usize {
        1
    }

    fn decide(&self, loads: &[Rational], window: &LookaheadWindow) -> usize {
        match window.next() {
            Some(next) if !window.is_last => {
                three_la1_admit(&loads[0], &loads[1], &loads[2], &window.current, next)
            }
            _ => least_loaded(loads),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchedulerId {
    Ls,
    TwoLa1,
    ThreeLa1,
}

impl SchedulerId {
    pub const ALL: [SchedulerId; 3] = [SchedulerId::Ls, SchedulerId::TwoLa1, SchedulerId::ThreeLa1];

    /// Instantiates the policy for `machines` machines.
    pub fn build(self, machines: usize) -> Result<Box<dyn OnlineScheduler>> {
        let mismatch = || Error::SchedulerMachineMismatch {
            scheduler: self.to_string(),
            machines,
        };
        match self {
            SchedulerId::Ls => Ok(Box::new(ListScheduling::new(machines)?)),
            SchedulerId::TwoLa1 if machines == 2 => Ok(Box::new(TwoLa1)),
            SchedulerId::ThreeLa1 if machines == 3 => Ok(Box::new(ThreeLa1)),
            _ => Err(mismatch()),
        }
    }
}

impl fmt::Display for SchedulerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SchedulerId::Ls => "ls",
            SchedulerId::TwoLa1 => "2la1",
            SchedulerId::ThreeLa1 => "3la1",
        })
    }
}

impl FromStr for SchedulerId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ls" => Ok(SchedulerId::Ls),
            "2la1" | "2-la1" | "two_la1" => Ok(SchedulerId::TwoLa1),
            "3la1" | "3-la1" | "three_la1" => Ok(SchedulerId::ThreeLa1),
            other => Err(Error::InvalidParam(format!("unknown scheduler {other:?}"))),
        }
    }
}

/// One decision of an online run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub job: usize,
    pub window: LookaheadWindow,
    /// 1-based.
    pub machine: usize,
    pub loads_after: Vec<Rational>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecisionTrace {
    pub decisions: Vec<Decision>,
}

impl DecisionTrace {
    pub fn machines(&self) -> Vec<usize> {
        self.decisions.iter().map(|d| d.machine).collect()
    }

    pub fn len(&self) -> usize {
        self.decisions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decisions.is_empty()
    }
}

impl fmt::Display for DecisionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.decisions {
            let future = d
                .window
                .future
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            let loads = d
                .loads_after
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",");
            writeln!(
                f,
                "J{} p={} sees [{}] -> M{} loads ({})",
                d.job, d.window.current, future, d.machine, loads
            )?;
        }
        Ok(())
    }
}

pub(crate) fn check_lookahead(policy: &dyn OnlineScheduler, k: usize) -> Result<()> {
    if k < policy.min_lookahead() {
        return Err(Error::InsufficientLookahead {
            scheduler: policy.name(),
            required: policy.min_lookahead(),
            given: k,
        });
    }
    Ok(())
}

/// Feeds `instance` job by job to `policy` under `k`-lookahead.
pub fn run_online(
    policy: &dyn OnlineScheduler,
    instance: &Instance,
    k: usize,
) -> Result<(Schedule, DecisionTrace)> {
    check_lookahead(policy, k)?;
    let m = policy.machines();
    let mut loads = vec![Rational::zero(); m];
    let mut trace = DecisionTrace::default();
    for i in 1..=instance.len() {
        let window = lookahead_window(instance, i, k)?;
        let machine = policy.decide(&loads, &window);
        if machine == 0 || machine > m {
            return Err(Error::InvalidDecision { machine, machines: m });
        }
        loads[machine - 1] += &window.current;
        trace.decisions.push(Decision {
            job: i,
            window,
            machine,
            loads_after: loads.clone(),
        });
    }
    let schedule = Schedule::new(instance, m, trace.machines())?;
    debug_assert_eq!(schedule.loads(), &loads[..]);
    Ok((schedule, trace))
}

pub fn ls_schedule(instance: &Instance, m: usize) -> Result<(Schedule, DecisionTrace)> {
    run_online(&ListScheduling::new(m)?, instance, 0)
}

pub fn two_la1_schedule(instance: &Instance) -> Result<(Schedule, DecisionTrace)> {
    run_online(&TwoLa1, instance, 1)
}

pub fn three_la1_schedule(instance: &Instance) -> Result<(Schedule, DecisionTrace)> {
    run_online(&ThreeLa1, instance, 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn inst(v: &[i64]) -> Instance {
        Instance::from_integers(v.iter().copied()).unwrap()
    }

    #[test]
    fn ls_examples() {
        let (s, _) = ls_schedule(&inst(&[1, 1, 2]), 2).unwrap();
        assert_eq!(s.makespan(), &r(3));
        assert_eq!(s.assignment(), &[1, 2, 1]);

        let (s, _) = ls_schedule(&inst(&[5]), 2).unwrap();
        assert_eq!(s.makespan(), &r(5));

        let (s, _) = ls_schedule(&inst(&[7, 4, 4, 7, 11]), 3).unwrap();
        assert_eq!(s.loads(), &[r(7), r(11), r(15)]);
        assert_eq!(s.makespan(), &r(15));
    }

    #[test]
    fn two_la1_admission() {
        assert!(two_la1_admit(&r(0), &r(0), &r(1), &r(1)));
        // equality case taken from the tight family at n = 6
        assert!(two_la1_admit(&r(9), &r(0), &r(15), &r(12)));
        assert!(!two_la1_admit(&r(9), &r(0), &r(15), &rat(23, 2)));
        // 3·(1+1) = 6 <= 2·4 = 8
        assert!(two_la1_admit(&r(1), &r(1), &r(1), &r(1)));
        // 3·(2+1) = 9 > 2·4 = 8
        assert!(!two_la1_admit(&r(2), &r(0), &r(1), &r(1)));
    }

    #[test]
    fn two_la1_examples() {
        let (s, _) = two_la1_schedule(&inst(&[1, 1, 2])).unwrap();
        assert_eq!(s.loads(), &[r(2), r(2)]);

        let (s, _) = two_la1_schedule(&inst(&[1, 1, 1, 6, 15, 12])).unwrap();
        assert_eq!(s.assignment(), &[1, 1, 1, 1, 1, 2]);
        assert_eq!(s.loads(), &[r(24), r(12)]);
        assert_eq!(s.makespan(), &r(24));

        let (s, trace) = two_la1_schedule(&inst(&[1; 6])).unwrap();
        assert_eq!(trace.machines(), [1, 1, 2, 1, 1, 2]);
        assert_eq!(s.jobs_on(1), 4);
        assert_eq!(s.makespan(), &r(4));
    }

    #[test]
    fn single_job_goes_to_m1() {
        let (s, _) = two_la1_schedule(&inst(&[3])).unwrap();
        assert_eq!(s.assignment(), &[1]);
        let (s, _) = three_la1_schedule(&inst(&[3])).unwrap();
        assert_eq!(s.assignment(), &[1]);
    }

    #[test]
    fn three_la1_admission() {
        assert_eq!(three_la1_admit(&r(0), &r(0), &r(0), &r(16), &r(16)), 3);
        assert_eq!(three_la1_admit(&r(0), &r(0), &r(16), &r(16), &r(1)), 1);
        assert_eq!(three_la1_admit(&r(0), &r(0), &r(0), &r(1), &r(1)), 3);
        // 33·(0+7) = 231 <= 15·30 = 450 but 33·15 = 495 > 16·30 = 480
        assert_eq!(three_la1_admit(&r(8), &r(0), &r(7), &r(7), &r(8)), 2);
    }

    #[test]
    fn three_la1_examples() {
        let (s, _) = three_la1_schedule(&inst(&[17, 14, 1, 1])).unwrap();
        assert_eq!(s.assignment(), &[3, 1, 1, 2]);
        assert_eq!(s.makespan(), &r(17));

        let (s, _) = three_la1_schedule(&inst(&[1, 1, 14, 17])).unwrap();
        assert_eq!(s.makespan(), &r(17));

        let (s, _) = three_la1_schedule(&inst(&[7, 4, 4, 7, 11])).unwrap();
        assert_eq!(s.assignment(), &[3, 1, 1, 1, 2]);
        assert_eq!(s.loads(), &[r(15), r(11), r(7)]);

        let (s, _) = three_la1_schedule(&inst(&[16, 16, 1])).unwrap();
        assert_eq!(s.makespan(), &r(16));
    }

    #[test]
    fn machine_mismatch_and_lookahead_errors() {
        assert!(matches!(
            SchedulerId::TwoLa1.build(3),
            Err(Error::SchedulerMachineMismatch { .. })
        ));
        assert!(matches!(
            SchedulerId::ThreeLa1.build(2),
            Err(Error::SchedulerMachineMismatch { .. })
        ));
        assert!(SchedulerId::Ls.build(1).is_err());
        assert!(SchedulerId::Ls.build(7).is_ok());
        assert!(matches!(
            run_online(&TwoLa1, &inst(&[1, 2]), 0),
            Err(Error::InsufficientLookahead { .. })
        ));
    }

    #[test]
    fn trace_loads_accumulate() {
        let (_, trace) = three_la1_schedule(&inst(&[3, 1, 4, 1, 5, 9, 2, 6])).unwrap();
        let mut prev = vec![Rational::zero(); 3];
        for d in &trace.decisions {
            prev[d.machine - 1] += &d.window.current;
            assert_eq!(d.loads_after, prev);
        }
    }

    #[test]
    fn scheduler_ids_round_trip() {
        for id in SchedulerId::ALL {
            assert_eq!(id.to_string().parse::<SchedulerId>().unwrap(), id);
        }
        assert!("lpt".parse::<SchedulerId>().is_err());
    }
}
