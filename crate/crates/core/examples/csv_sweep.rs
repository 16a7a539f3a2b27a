use lookahead_sched::adversaries::parse_family_range;
use lookahead_sched::algorithms::SchedulerId;
use lookahead_sched::harness::{emit_csv, run_family_sweep, run_one};
use lookahead_sched::model::parse_instance_text;

fn main() -> lookahead_sched::Result<()> {
    let mut rows = run_family_sweep(SchedulerId::TwoLa1, &parse_family_range("theorem2:n=4..8")?, 2, 1)?;
    rows.extend(run_family_sweep(SchedulerId::Ls, &parse_family_range("corollary21:x=1..3")?, 2, 0)?);

    let instance = parse_instance_text("# mixed\n3/2\n1\n\n5/2\n1\n")?;
    rows.push(run_one(SchedulerId::TwoLa1, &instance, 2, 1)?);

    print!("{}", emit_csv(&rows));
    Ok(())
}
