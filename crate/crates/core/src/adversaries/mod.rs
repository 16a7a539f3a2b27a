//! Lower-bound constructions: static instance families, adaptive games and
//! exhaustive instance spaces.

mod enumerate;
mod families;
mod game;

pub use enumerate::{enumerate_instances, GradedSpace, InstanceSpace};
pub use families::{named_instance, parse_family_range, FamilyId, Thm4Case};
pub use game::{
    play, play_theorem1, play_theorem4, Adversary, GameTranscript, GameView, Theorem1Adversary,
    Theorem4Adversary,
};
