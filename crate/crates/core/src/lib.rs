//! Semi-online makespan scheduling on identical machines with k-lookahead.
//!
//! When job `J_i` arrives, a k-lookahead scheduler also sees the processing
//! times of the next `k` jobs. The crate provides:
//!
//! - [`algorithms`]: List Scheduling, the two-machine 2-LA1 rule and the
//!   three-machine 3-LA1 rule behind one [`algorithms::OnlineScheduler`] trait;
//! - [`oracle`]: exact optimal offline makespan and the classic lower bounds;
//! - [`adversaries`]: named lower-bound instances, adaptive adversary games
//!   and exhaustive instance spaces;
//! - [`harness`]: single runs, exhaustive bound verification and CSV output;
//! - [`cli`]: the `lookahead` command line.
//!
//! All arithmetic is exact ([`rational::Rational`]).
//!
//! ```
//! use lookahead_sched::{algorithms::two_la1_schedule, model::Instance, oracle::optimal_makespan};
//!
//! let jobs = Instance::from_integers([1, 1, 2]).unwrap();
//! let (schedule, _) = two_la1_schedule(&jobs).unwrap();
//! assert_eq!(schedule.makespan(), &optimal_makespan(&jobs, 2).unwrap().makespan);
//! ```

pub mod adversaries;
pub mod algorithms;
pub mod cli;
pub mod error;
pub mod harness;
pub mod model;
pub mod oracle;
pub mod rational;

pub use error::{Error, Result};
pub use model::{Instance, Schedule};
pub use rational::Rational;
