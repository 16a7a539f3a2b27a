//! Adaptive adversaries that pick processing times after seeing decisions.

use lookahead_sched::adversaries::{play_theorem1, play_theorem4};
use lookahead_sched::algorithms::SchedulerId;
use lookahead_sched::Rational;

fn main() -> lookahead_sched::Result<()> {
    for id in [SchedulerId::Ls, SchedulerId::TwoLa1] {
        let policy = id.build(2)?;
        for n in [60, 80, 100, 200] {
            let t = play_theorem1(policy.as_ref(), n, 1, Rational::one())?;
            println!(
                "{id:<5} n={n:<4} alg {:<4} opt {:<4} ratio {} (~{:.4})",
                t.alg_makespan.to_string(),
                t.opt_makespan.to_string(),
                t.ratio,
                t.ratio.to_f64()
            );
        }
    }

    let policy = SchedulerId::ThreeLa1.build(3)?;
    let t = play_theorem4(policy.as_ref())?;
    println!();
    println!("three machines: {} decisions {:?}", t.final_instance, t.decisions);
    println!("{}: ratio {}", t.label.as_deref().unwrap_or("-"), t.ratio);
    assert!(t.is_sound());
    Ok(())
}
