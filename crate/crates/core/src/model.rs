//! Jobs, instances, lookahead windows and schedules.

use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Job {
    /// 1-based position in the arrival sequence.
    pub index: usize,
    pub processing_time: Rational,
}

/// A non-empty job sequence with strictly positive processing times.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Instance {
    times: Vec<Rational>,
}

impl Instance {
    pub fn new(processing_times: Vec<Rational>) -> Result<Self> {
        if processing_times.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if let Some(pos) = processing_times.iter().position(|p| !p.is_positive()) {
            return Err(Error::NonPositiveTime(pos + 1));
        }
        Ok(Instance {
            times: processing_times,
        })
    }

    /// Convenience constructor for integer sequences.
    pub fn from_integers<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        Instance::new(values.into_iter().map(Rational::from).collect())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    /// Always false; instances are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn processing_times(&self) -> &[Rational] {
        &self.times
    }

    /// Processing time of job `index` (1-based).
    pub fn time(&self, index: usize) -> Result<&Rational> {
        index
            .checked_sub(1)
            .and_then(|i| self.times.get(i))
            .ok_or(Error::IndexOutOfRange {
                index,
                len: self.len(),
            })
    }

    pub fn jobs(&self) -> impl Iterator<Item = Job> + '_ {
        self.times.iter().enumerate().map(|(i, p)| Job {
            index: i + 1,
            processing_time: p.clone(),
        })
    }

    pub fn total(&self) -> Rational {
        self.times.iter().sum()
    }

    pub fn max_time(&self) -> &Rational {
        self.times.iter().max().expect("instance is non-empty")
    }

    /// Every processing time multiplied by `factor` (which must be positive).
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        Instance::new(self.times.iter().map(|p| p * factor).collect())
    }

    /// Space separated values, e.g. `1 1 7/2`. Used as an inline CSV descriptor.
    pub fn inline(&self) -> String {
        self.times
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Serialises in the line-oriented instance text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.times {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.times.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
    }
}

pub fn make_instance(processing_times: Vec<Rational>) -> Result<Instance> {
    Instance::new(processing_times)
}

/// Parses the instance text format: one processing time per line (`3` or `7/2`),
/// `#` starts a comment line, blank lines are skipped.
pub fn parse_instance_text(text: &str) -> Result<Instance> {
    let mut times = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let value = line.parse::<Rational>().map_err(|_| Error::Parse {
            line: lineno + 1,
            message: format!("malformed processing time {line:?}"),
        })?;
        times.push(value);
    }
    Instance::new(times)
}

/// What a k-lookahead scheduler sees when job `index` arrives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LookaheadWindow {
    pub index: usize,
    pub current: Rational,
    /// `p_{index+1} ..= p_{min(index+k, n)}`.
    pub future: Vec<Rational>,
    /// Set when `index == n`. With k >= 1 this coincides with an empty `future`;
    /// with k = 0 it is the only way to tell.
    pub is_last: bool,
}

impl LookaheadWindow {
    pub fn next(&self) -> Option<&Rational> {
        self.future.first()
    }
}

/// Revelation contract: job `i` sees itself plus the next `k` processing times,
/// truncated at the end of the sequence. `k = 0` is accepted and models a
/// plain online scheduler.
pub fn lookahead_window(instance: &Instance, i: usize, k: usize) -> Result<LookaheadWindow> {
    let current = instance.time(i)?.clone();
    let n = instance.len();
    let end = n.min(i.saturating_add(k));
    Ok(LookaheadWindow {
        index: i,
        current,
        future: instance.times[i..end].to_vec(),
        is_last: i == n,
    })
}

/// A complete assignment of jobs to machines together with the derived loads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    machine_count: usize,
    /// `assignment[j - 1]` is the 1-based machine of job `j`.
    assignment: Vec<usize>,
    loads: Vec<Rational>,
    makespan: Rational,
}

impl Schedule {
    pub fn new(instance: &Instance, machine_count: usize, assignment: Vec<usize>) -> Result<Self> {
        if machine_count < 1 {
            return Err(Error::InvalidParam("machine count must be positive".into()));
        }
        if assignment.len() != instance.len() {
            return Err(Error::InvalidParam(format!(
                "assignment covers {} jobs, instance has {}",
                assignment.len(),
                instance.len()
            )));
        }
        let mut loads = vec![Rational::zero(); machine_count];
        for (p, &machine) in instance.processing_times().iter().zip(&assignment) {
            if machine == 0 || machine > machine_count {
                return Err(Error::InvalidDecision {
                    machine,
                    machines: machine_count,
                });
            }
            loads[machine - 1] += p;
        }
        let makespan = loads.iter().max().cloned().unwrap_or_default();
        Ok(Schedule {
            machine_count,
            assignment,
            loads,
            makespan,
        })
    }

    pub fn machine_count(&self) -> usize {
        self.machine_count
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// 1-based machine of job `job` (1-based).
    pub fn machine_of(&self, job: usize) -> Option<usize> {
        job.checked_sub(1).and_then(|j| self.assignment.get(j)).copied()
    }

    pub fn loads(&self) -> &[Rational] {
        &self.loads
    }

    pub fn makespan(&self) -> &Rational {
        &self.makespan
    }

    pub fn jobs_on(&self, machine: usize) -> usize {
        self.assignment.iter().filter(|&&m| m == machine).count()
    }
}
