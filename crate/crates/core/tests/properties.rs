use lookahead_sched::algorithms::{run_online, SchedulerId};
use lookahead_sched::harness::verify_bound;
use lookahead_sched::oracle::{opt_lower_bound, optimal_makespan};
use lookahead_sched::rational::{parse_list, rat};
use lookahead_sched::{Instance, Rational};
use proptest::prelude::*;

fn schedulers() -> impl Strategy<Value = (SchedulerId, usize)> {
    prop_oneof![
        Just((SchedulerId::Ls, 2)),
        Just((SchedulerId::Ls, 3)),
        Just((SchedulerId::TwoLa1, 2)),
        Just((SchedulerId::ThreeLa1, 3)),
    ]
}

fn times(max_len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((1i64..=12, 1i64..=4), 1..=max_len)
        .prop_map(|v| v.into_iter().map(|(n, d)| rat(n, d)).collect())
}

proptest! {
    #[test]
    fn loads_conserve_total((id, m) in schedulers(), t in times(14), k in 1usize..4) {
        let instance = Instance::new(t).unwrap();
        let policy = id.build(m).unwrap();
        let (schedule, trace) = run_online(policy.as_ref(), &instance, k).unwrap();
        let sum: Rational = schedule.loads().iter().sum();
        prop_assert_eq!(sum, instance.total());
        prop_assert_eq!(schedule.makespan(), schedule.loads().iter().max().unwrap());
        prop_assert_eq!(trace.machines(), schedule.assignment().to_vec());
    }

    #[test]
    fn assignment_is_scale_invariant(
        (id, m) in schedulers(),
        t in times(12),
        (cn, cd) in (1i64..=50, 1i64..=50),
    ) {
        let instance = Instance::new(t).unwrap();
        let c = rat(cn, cd);
        let scaled = instance.scaled(&c).unwrap();
        let policy = id.build(m).unwrap();
        let (a, _) = run_online(policy.as_ref(), &instance, 1).unwrap();
        let (b, _) = run_online(policy.as_ref(), &scaled, 1).unwrap();
        prop_assert_eq!(a.assignment(), b.assignment());
        prop_assert_eq!(b.makespan(), &(a.makespan() * &c));
    }

    #[test]
    fn decisions_ignore_unrevealed_jobs(
        (id, m) in schedulers(),
        t in times(12),
        k in 1usize..3,
        cut in 0usize..12,
        tail in times(12),
    ) {
        let instance = Instance::new(t.clone()).unwrap();
        let n = t.len();
        let i = cut % n + 1;
        // keep jobs 1..=i+k, replace the rest; the last-job flag must stay put too
        let keep = (i + k).min(n);
        if keep < n {
            let mut mutated = t[..keep].to_vec();
            mutated.extend(tail.iter().cloned().cycle().take(n - keep));
            let other = Instance::new(mutated).unwrap();
            let policy = id.build(m).unwrap();
            let (a, _) = run_online(policy.as_ref(), &instance, k).unwrap();
            let (b, _) = run_online(policy.as_ref(), &other, k).unwrap();
            prop_assert_eq!(&a.assignment()[..i], &b.assignment()[..i]);
        }
    }

    #[test]
    fn optimum_is_sandwiched((id, m) in schedulers(), t in times(9)) {
        let instance = Instance::new(t).unwrap();
        let policy = id.build(m).unwrap();
        let (schedule, _) = run_online(policy.as_ref(), &instance, 1).unwrap();
        let opt = optimal_makespan(&instance, m).unwrap();
        prop_assert!(opt_lower_bound(&instance, m) <= opt.makespan);
        prop_assert!(&opt.makespan <= schedule.makespan());
    }
}

#[test]
fn verification_is_independent_of_worker_count() {
    let values = parse_list("1,2,3,4").unwrap();
    for (id, m, bound) in [
        (SchedulerId::TwoLa1, 2, rat(4, 3)),
        (SchedulerId::ThreeLa1, 3, rat(16, 11)),
        (SchedulerId::Ls, 2, rat(3, 2)),
    ] {
        let one = verify_bound(id, m, 1, 5, &values, &bound, 1).unwrap();
        let four = verify_bound(id, m, 1, 5, &values, &bound, 4).unwrap();
        let seven = verify_bound(id, m, 1, 5, &values, &bound, 7).unwrap();
        assert_eq!(one, four);
        assert_eq!(one, seven);
    }
}
