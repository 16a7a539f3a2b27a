use lookahead_sched::adversaries::{named_instance, FamilyId};
use lookahead_sched::algorithms::two_la1_schedule;
use lookahead_sched::oracle::{competitive_ratio, optimal_makespan};

fn main() -> lookahead_sched::Result<()> {
    println!("{:>3} {:>6} {:>6} {:>8}", "n", "alg", "opt", "ratio");
    for n in 4..=20 {
        let instance = named_instance(&FamilyId::Theorem2(n))?;
        let (schedule, _) = two_la1_schedule(&instance)?;
        let opt = optimal_makespan(&instance, 2)?;
        let ratio = competitive_ratio(schedule.makespan(), &opt.makespan)?;
        println!(
            "{:>3} {:>6} {:>6} {:>8}",
            n,
            schedule.makespan().to_string(),
            opt.makespan.to_string(),
            ratio.to_string()
        );
    }

    // equal jobs: about two thirds land on the first machine
    for n in [6usize, 12, 30] {
        let instance = lookahead_sched::Instance::from_integers(vec![1; n])?;
        let (schedule, _) = two_la1_schedule(&instance)?;
        println!("{n} unit jobs: {} on M1, makespan {}", schedule.jobs_on(1), schedule.makespan());
    }
    Ok(())
}
