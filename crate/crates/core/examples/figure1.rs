//! List Scheduling against the one-lookahead policy on `<1, 1, 2>`.

use lookahead_sched::algorithms::{ls_schedule, two_la1_schedule};
use lookahead_sched::oracle::optimal_makespan;
use lookahead_sched::Instance;

fn main() -> lookahead_sched::Result<()> {
    let instance = Instance::from_integers([1, 1, 2])?;

    let (ls, _) = ls_schedule(&instance, 2)?;
    let (la, trace) = two_la1_schedule(&instance)?;
    let opt = optimal_makespan(&instance, 2)?;

    println!("instance {instance}");
    println!("LS     assignment {:?} makespan {}", ls.assignment(), ls.makespan());
    println!("2-LA1  assignment {:?} makespan {}", la.assignment(), la.makespan());
    println!("OPT    assignment {:?} makespan {}", opt.witness, opt.makespan);
    println!();
    print!("{trace}");
    Ok(())
}
