//! Experiment execution and reporting.

use std::fmt;
use std::thread;

use crate::adversaries::{named_instance, FamilyId, GradedSpace};
use crate::algorithms::{run_online, SchedulerId};
use crate::error::{Error, Result};
use crate::model::Instance;
use crate::oracle::{competitive_ratio, opt_lower_bound, optimal_makespan};
use crate::rational::Rational;

pub const CSV_HEADER: [&str; 8] = [
    "scheduler",
    "instance",
    "m",
    "k",
    "alg_makespan",
    "opt_makespan",
    "ratio",
    "ratio_decimal",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentRow {
    pub scheduler: SchedulerId,
    /// Family identifier or the inline processing times.
    pub instance: String,
    pub m: usize,
    pub k: usize,
    pub alg_makespan: Rational,
    pub opt_makespan: Rational,
    pub ratio: Rational,
}

impl fmt::Display for ExperimentRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on {} (m={}, k={}): makespan {}, opt {}, ratio {} (~{:.6})",
            self.scheduler,
            self.instance,
            self.m,
            self.k,
            self.alg_makespan,
            self.opt_makespan,
            self.ratio,
            self.ratio.to_f64()
        )
    }
}

pub fn run_one(scheduler: SchedulerId, instance: &Instance, m: usize, k: usize) -> Result<ExperimentRow> {
    run_described(scheduler, instance, instance.inline(), m, k)
}

pub fn run_family(scheduler: SchedulerId, family: &FamilyId, m: usize, k: usize) -> Result<ExperimentRow> {
    let instance = named_instance(family)?;
    run_described(scheduler, &instance, family.to_string(), m, k)
}

fn run_described(
    scheduler: SchedulerId,
    instance: &Instance,
    descriptor: String,
    m: usize,
    k: usize,
) -> Result<ExperimentRow> {
    let policy = scheduler.build(m)?;
    let (schedule, _) = run_online(policy.as_ref(), instance, k)?;
    let opt = optimal_makespan(instance, m)?;
    let ratio = competitive_ratio(schedule.makespan(), &opt.makespan)?;
    Ok(ExperimentRow {
        scheduler,
        instance: descriptor,
        m,
        k,
        alg_makespan: schedule.makespan().clone(),
        opt_makespan: opt.makespan,
        ratio,
    })
}

pub fn run_family_sweep(
    scheduler: SchedulerId,
    families: &[FamilyId],
    m: usize,
    k: usize,
) -> Result<Vec<ExperimentRow>> {
    families
        .iter()
        .map(|f| run_family(scheduler, f, m, k))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub scheduler: SchedulerId,
    pub m: usize,
    pub k: usize,
    pub n_max: usize,
    pub values: Vec<Rational>,
    pub instances_checked: u64,
    pub max_ratio: Rational,
    pub argmax_instance: Instance,
    /// Every enumerated instance whose ratio exceeds `target_bound`, in enumeration order.
    pub violations: Vec<(Instance, Rational)>,
    pub target_bound: Rational,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn space_descriptor(&self) -> String {
        let values = self
            .values
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!("n=1..{} values={{{}}}", self.n_max, values)
    }

    /// The argmax row followed by one row per violation.
    pub fn to_rows(&self) -> Result<Vec<ExperimentRow>> {
        std::iter::once(&self.argmax_instance)
            .chain(self.violations.iter().map(|(i, _)| i))
            .map(|i| run_one(self.scheduler, i, self.m, self.k))
            .collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "scheduler {} m={} k={} space {}",
            self.scheduler,
            self.m,
            self.k,
            self.space_descriptor()
        )?;
        writeln!(f, "instances checked: {}", self.instances_checked)?;
        writeln!(
            f,
            "max ratio: {} (~{:.6}) on {}",
            self.max_ratio,
            self.max_ratio.to_f64(),
            self.argmax_instance
        )?;
        writeln!(f, "target bound: {}", self.target_bound)?;
        writeln!(f, "violations: {}", self.violations.len())?;
        for (instance, ratio) in &self.violations {
            writeln!(f, "  {instance} ratio {ratio} (~{:.6})", ratio.to_f64())?;
        }
        Ok(())
    }
}

#[derive(Debug, Default)]
struct Partial {
    checked: u64,
    best: Option<(Rational, Instance)>,
    violations: Vec<(Instance, Rational)>,
}

impl Partial {
    fn offer(&mut self, ratio: Rational, instance: Instance) {
        let better = match &self.best {
            None => true,
            Some((r, i)) => ratio > *r || (ratio == *r && instance < *i),
        };
        if better {
            self.best = Some((ratio, instance));
        }
    }

    /// `other` must cover indices after `self`.
    fn merge(mut self, other: Partial) -> Partial {
        self.checked += other.checked;
        if let Some((r, i)) = other.best {
            self.offer(r, i);
        }
        self.violations.extend(other.violations);
        self
    }
}

fn check_range(
    scheduler: SchedulerId,
    m: usize,
    k: usize,
    space: &GradedSpace,
    start: u64,
    end: u64,
    target: &Rational,
) -> Result<Partial> {
    let policy = scheduler.build(m)?;
    let mut partial = Partial::default();
    for instance in space.range(start, end) {
        let (schedule, _) = run_online(policy.as_ref(), &instance, k)?;
        let opt = optimal_makespan(&instance, m)?.makespan;
        let lower = opt_lower_bound(&instance, m);
        if !(schedule.makespan() >= &opt && opt >= lower) {
            return Err(Error::Inconsistent {
                reason: format!(
                    "expected alg {} >= opt {} >= lower bound {}",
                    schedule.makespan(),
                    opt,
                    lower
                ),
                instance,
            });
        }
        let ratio = competitive_ratio(schedule.makespan(), &opt)?;
        partial.checked += 1;
        if &ratio > target {
            partial.violations.push((instance.clone(), ratio.clone()));
        }
        partial.offer(ratio, instance);
    }
    Ok(partial)
}

/// Runs `scheduler` and the oracle on every instance of length `1..=n_max`
/// over `values`, split across `workers` threads. The report is identical for
/// any worker count.
pub fn verify_bound(
    scheduler: SchedulerId,
    m: usize,
    k: usize,
    n_max: usize,
    values: &[Rational],
    target_bound: &Rational,
    workers: usize,
) -> Result<VerificationReport> {
    // fail fast on mismatches before spawning anything
    let policy = scheduler.build(m)?;
    crate::algorithms::check_lookahead(policy.as_ref(), k)?;
    let space = GradedSpace::new(n_max, values.to_vec())?;
    let workers = workers.max(1) as u64;
    let chunk = space.len().div_ceil(workers).max(1);

    let partials: Vec<Result<Partial>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let space = &space;
                let (start, end) = (w * chunk, ((w + 1) * chunk).min(space.len()));
                scope.spawn(move || check_range(scheduler, m, k, space, start, end, target_bound))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification worker panicked"))
            .collect()
    });

    let mut total = Partial::default();
    for p in partials {
        total = total.merge(p?);
    }
    let (max_ratio, argmax_instance) = total.best.expect("space is non-empty");
    Ok(VerificationReport {
        scheduler,
        m,
        k,
        n_max,
        values: values.to_vec(),
        instances_checked: total.checked,
        max_ratio,
        argmax_instance,
        violations: total.violations,
        target_bound: target_bound.clone(),
    })
}

/// RFC-4180 CSV with the fixed header. `ratio_decimal` is for display only.
pub fn emit_csv(rows: &[ExperimentRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("write to memory");
    for r in rows {
        writer
            .write_record([
                r.scheduler.to_string(),
                r.instance.clone(),
                r.m.to_string(),
                r.k.to_string(),
                r.alg_makespan.to_string(),
                r.opt_makespan.to_string(),
                r.ratio.to_string(),
                format!("{:.6}", r.ratio.to_f64()),
            ])
            .expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

pub fn emit_report_csv(report: &VerificationReport) -> Result<String> {
    Ok(emit_csv(&report.to_rows()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn run_one_examples() {
        let row = run_family(SchedulerId::TwoLa1, &FamilyId::Fig1, 2, 1).unwrap();
        assert_eq!(row.ratio, Rational::one());
        assert_eq!(row.instance, "fig1");

        let row = run_family(SchedulerId::TwoLa1, &FamilyId::Theorem2(6), 2, 1).unwrap();
        assert_eq!((row.alg_makespan.clone(), row.opt_makespan.clone()), (Rational::from(24), Rational::from(18)));
        assert_eq!(row.ratio, rat(4, 3));

        let row = run_family(
            SchedulerId::ThreeLa1,
            &"thm4:case=1".parse().unwrap(),
            3,
            1,
        )
        .unwrap();
        assert_eq!(row.ratio, rat(15, 11));

        assert!(matches!(
            run_family(SchedulerId::TwoLa1, &FamilyId::Fig1, 3, 1),
            Err(Error::SchedulerMachineMismatch { .. })
        ));
    }

    #[test]
    fn trivial_verification() {
        for id in [SchedulerId::Ls, SchedulerId::TwoLa1] {
            let r = verify_bound(id, 2, 1, 1, &ints(&[1]), &Rational::one(), 1).unwrap();
            assert_eq!(r.max_ratio, Rational::one());
            assert_eq!(r.instances_checked, 1);
            assert!(r.passed());
        }
    }

    #[test]
    fn violations_are_collected_not_fatal() {
        // LS reaches 3/2 on <1,1,2>; a bound of 1 must flag it and keep going
        let r = verify_bound(SchedulerId::Ls, 2, 0, 3, &ints(&[1, 2]), &Rational::one(), 2).unwrap();
        assert_eq!(r.instances_checked, 2 + 4 + 8);
        assert_eq!(r.max_ratio, rat(3, 2));
        assert!(r.violations.iter().any(|(i, _)| i == &Instance::from_integers([1, 1, 2]).unwrap()));
        assert!(r.violations.iter().all(|(_, ratio)| ratio > &Rational::one()));
    }

    #[test]
    fn csv_shapes() {
        let empty = emit_csv(&[]);
        assert_eq!(empty, "scheduler,instance,m,k,alg_makespan,opt_makespan,ratio,ratio_decimal\n");

        let row = run_one(SchedulerId::Ls, &Instance::new(vec![rat(7, 2), rat(1, 2)]).unwrap(), 2, 0).unwrap();
        let text = emit_csv(&[row]);
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "ls,7/2 1/2,2,0,7/2,7/2,1,1.000000");

        let rows = run_family_sweep(
            SchedulerId::TwoLa1,
            &crate::adversaries::parse_family_range("theorem2:n=4..6").unwrap(),
            2,
            1,
        )
        .unwrap();
        let text = emit_csv(&rows);
        assert!(text.lines().skip(1).all(|l| l.split(',').nth(6) == Some("4/3")));
    }

    #[test]
    fn theorem2_family_stops_being_tight_at_seven() {
        // the third unit job fails admission (9 > 8) once n - 3 >= 3
        let row = run_family(SchedulerId::TwoLa1, &FamilyId::Theorem2(7), 2, 1).unwrap();
        assert_eq!(row.alg_makespan, Rational::from(27));
        assert_eq!(row.opt_makespan, Rational::from(21));
        assert_eq!(row.ratio, rat(9, 7));
    }

    #[test]
    fn sweep_examples() {
        let rows = run_family_sweep(SchedulerId::ThreeLa1, &[FamilyId::Lemma6(1)], 3, 1).unwrap();
        assert_eq!(rows[0].alg_makespan, Rational::from(16));
        assert_eq!(rows[0].opt_makespan, Rational::from(11));

        let families = crate::adversaries::parse_family_range("corollary21:x=1..3").unwrap();
        let rows = run_family_sweep(SchedulerId::Ls, &families, 2, 0).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.ratio == Rational::one()));
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let row = ExperimentRow {
            scheduler: SchedulerId::Ls,
            instance: "a,b".into(),
            m: 2,
            k: 0,
            alg_makespan: Rational::one(),
            opt_makespan: Rational::one(),
            ratio: Rational::one(),
        };
        assert!(emit_csv(&[row]).contains("\"a,b\""));
    }
}
