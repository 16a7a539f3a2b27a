use lookahead_sched::algorithms::SchedulerId;
use lookahead_sched::harness::verify_bound;
use lookahead_sched::rational::{parse_list, rat};

fn main() -> lookahead_sched::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let small = parse_list("1,2,3").expect("valid list");
    let wide = parse_list("1,2,3,4,5,6").expect("valid list");

    let runs = [
        (SchedulerId::TwoLa1, 2, 7, &small, rat(4, 3)),
        (SchedulerId::TwoLa1, 2, 5, &wide, rat(4, 3)),
        (SchedulerId::Ls, 2, 7, &small, rat(3, 2)),
        (SchedulerId::ThreeLa1, 3, 6, &small, rat(16, 11)),
    ];
    for (id, m, n_max, values, bound) in runs {
        let report = verify_bound(id, m, 1, n_max, values, &bound, workers)?;
        println!("{id} m={m} {} bound {bound}", report.space_descriptor());
        println!("  checked {}", report.instances_checked);
        println!("  max {} at {}", report.max_ratio, report.argmax_instance);
        println!("  violations {}", report.violations.len());
        if let Some((instance, ratio)) = report.violations.first() {
            println!("  first {instance} ratio {ratio}");
        }
    }
    Ok(())
}
