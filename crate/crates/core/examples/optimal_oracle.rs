use lookahead_sched::oracle::{exhaustive_optimal, opt_lower_bound, optimal_makespan, optimal_makespan_with, OracleConfig};
use lookahead_sched::rational::parse_list;
use lookahead_sched::{Error, Instance};

fn main() -> lookahead_sched::Result<()> {
    let instance = Instance::new(parse_list("7/2,5/2,3,2,2,1/2").expect("valid list"))?;
    for m in 2..=3 {
        let dp = optimal_makespan(&instance, m)?;
        let brute = exhaustive_optimal(&instance, m)?;
        println!(
            "m={m} lower bound {} dp {} {:?} brute {} {:?}",
            opt_lower_bound(&instance, m),
            dp.makespan,
            dp.witness,
            brute.makespan,
            brute.witness
        );
    }

    let big = Instance::from_integers((1..=30).map(|v| v * 997))?;
    let tight = OracleConfig { max_scaled_total: 1_000, ..OracleConfig::default() };
    match optimal_makespan_with(&big, 2, &tight) {
        Err(Error::CapacityExceeded { reason, .. }) => println!("refused: {reason}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
