//! The three-machine policy on the small hand-built families.

use lookahead_sched::adversaries::{named_instance, FamilyId, Thm4Case};
use lookahead_sched::harness::run_family;
use lookahead_sched::algorithms::SchedulerId;

fn main() -> lookahead_sched::Result<()> {
    let mut families = vec![
        FamilyId::Lemma4,
        FamilyId::Lemma5a,
        FamilyId::Lemma5b,
        FamilyId::Lemma6(1),
        FamilyId::Lemma6(2),
    ];
    families.extend(Thm4Case::ALL.iter().map(|&c| FamilyId::Thm4(c)));

    for family in &families {
        let instance = named_instance(family)?;
        let row = run_family(SchedulerId::ThreeLa1, family, 3, 1)?;
        let shown = if instance.len() <= 8 {
            instance.to_string()
        } else {
            format!("{} unit jobs", instance.len())
        };
        println!("{:<14} {:<16} {}", family.to_string(), shown, row.ratio);
    }
    Ok(())
}
