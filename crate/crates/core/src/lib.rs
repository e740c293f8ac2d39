//! Exact admissibility-based solution concepts for finite normal-form games.
//!
//! The crate computes iterated admissibility and self-admissible sets with an
//! exact rational simplex, and checks epistemic conditions on finite
//! lexicographic type structures (cautious belief, certain belief, weak
//! assumption, type morphisms).
//!
//! ```
//! use admissible::game::Game;
//! use admissible::dominance::iterated_admissibility;
//!
//! let doc = r#"{"players":["a","b"],
//!   "strategies":{"a":["u","m","d"],"b":["l","r"]},
//!   "payoffs":{"u,l":[2,2],"u,r":[2,2],"m,l":[3,1],"m,r":[0,0],"d,l":[0,0],"d,r":[1,3]}}"#;
//! let game = Game::from_json_str(doc).unwrap();
//! let trace = iterated_admissibility(&game).unwrap();
//! assert_eq!(game.format_product(trace.limit()), "{m}×{l}");
//! ```

#![allow(clippy::needless_range_loop)]

pub mod acts;
pub mod cli;
pub mod dominance;
pub mod epistemic;
pub mod error;
pub mod game;
pub mod lp;
pub mod lps;
pub mod rational;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
