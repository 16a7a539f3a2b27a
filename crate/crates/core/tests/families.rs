use lookahead_sched::adversaries::{named_instance, play_theorem1, play_theorem4, FamilyId, Thm4Case};
use lookahead_sched::algorithms::{three_la1_schedule, two_la1_schedule, SchedulerId};
use lookahead_sched::oracle::{exhaustive_optimal, optimal_makespan};
use lookahead_sched::rational::rat;
use lookahead_sched::{Instance, Rational};

#[test]
fn theorem2_optimum_is_three_n() {
    for n in 4..=20u64 {
        let instance = named_instance(&FamilyId::Theorem2(n)).unwrap();
        let opt = optimal_makespan(&instance, 2).unwrap();
        assert_eq!(opt.makespan, Rational::from(3 * n), "n={n}");
    }
}

#[test]
fn thm4_cases_have_optimum_eleven() {
    for case in Thm4Case::ALL {
        let instance = named_instance(&FamilyId::Thm4(case)).unwrap();
        assert_eq!(optimal_makespan(&instance, 3).unwrap().makespan, Rational::from(11));
        assert_eq!(exhaustive_optimal(&instance, 3).unwrap().makespan, Rational::from(11));
    }
}

#[test]
fn equal_jobs_put_two_thirds_on_first_machine() {
    for n in 2..=30usize {
        let instance = Instance::from_integers(vec![1; n]).unwrap();
        let (schedule, _) = two_la1_schedule(&instance).unwrap();
        assert_eq!(schedule.jobs_on(1), 2 * n / 3, "n={n}");
    }
    let (single, _) = two_la1_schedule(&Instance::from_integers([1]).unwrap()).unwrap();
    assert_eq!(single.assignment(), &[1]);
}

#[test]
fn unit_jobs_on_three_machines() {
    let expected = [(1, 16), (2, 32), (3, 48)];
    for (x, makespan) in expected {
        let instance = named_instance(&FamilyId::Lemma6(x)).unwrap();
        let (schedule, _) = three_la1_schedule(&instance).unwrap();
        assert_eq!(schedule.makespan(), &Rational::from(makespan));
        assert_eq!(optimal_makespan(&instance, 3).unwrap().makespan, Rational::from(11 * x));
    }
}

#[test]
fn list_scheduling_game_floor() {
    let ls = SchedulerId::Ls.build(2).unwrap();
    for n in 60..=400 {
        let t = play_theorem1(ls.as_ref(), n, 1, Rational::one()).unwrap();
        assert!(t.is_sound());
        assert!(t.ratio >= rat(13, 10), "n={n} ratio {}", t.ratio);
        assert!(t.ratio <= rat(3, 2));
    }
}

#[test]
fn two_machine_policy_game_floor() {
    let policy = SchedulerId::TwoLa1.build(2).unwrap();
    let mut below = Vec::new();
    for n in 60..=400 {
        let t = play_theorem1(policy.as_ref(), n, 1, Rational::one()).unwrap();
        assert!(t.is_sound());
        if t.ratio < rat(13, 10) {
            below.push(n);
        }
    }
    assert_eq!(below, [61, 67, 73]);
    let dip = play_theorem1(policy.as_ref(), 61, 1, Rational::one()).unwrap();
    assert_eq!(dip.ratio, rat(40, 31));
}

#[test]
fn game_scales_with_leading_length() {
    let ls = SchedulerId::Ls.build(2).unwrap();
    let base = play_theorem1(ls.as_ref(), 100, 1, Rational::one()).unwrap();
    let scaled = play_theorem1(ls.as_ref(), 100, 1, rat(5, 2)).unwrap();
    assert!(scaled.is_sound());
    assert_eq!(scaled.decisions, base.decisions);
}

#[test]
fn larger_lookahead_game() {
    let ls = SchedulerId::Ls.build(2).unwrap();
    for k in 1..=4 {
        let t = play_theorem1(ls.as_ref(), 80, k, Rational::one()).unwrap();
        assert!(t.is_sound());
        assert_eq!(t.revealed.iter().map(|w| w.future.len()).max(), Some(k));
    }
}

#[test]
fn three_machine_game_transcripts() {
    for id in SchedulerId::ALL {
        let Ok(policy) = id.build(3) else { continue };
        let t = play_theorem4(policy.as_ref()).unwrap();
        assert!(t.is_sound());
        assert_eq!(t.opt_makespan, Rational::from(11));
    }
}
