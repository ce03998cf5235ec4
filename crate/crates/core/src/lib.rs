//! Exact ordering calculus for the single-mode Heisenberg-Weyl algebra.
//!
//! The crate is organised bottom-up:
//!
//! * [`rational`], [`spoly`], [`series`]: exact scalars, polynomials in the
//!   ordering parameter `s`, and truncated power series over `Q[s]`.
//! * [`weyl`]: boson words, normal / anti-normal forms and the maps between
//!   the operator algebra and commuting symbols at any ordering parameter.
//! * [`riordan`]: exponential Riordan arrays, Sheffer pairs, ladder
//!   operators and a small catalog of classical sequences.
//! * [`hsu_shiue`] and [`two_point`]: the Hsu-Shiue family and its
//!   two-point interpolation in `s`.
//! * [`ordering`]: ordered forms of powers and exponentials of
//!   single-annihilator words, each paired with a brute-force check.
//! * [`verify`]: named verification suites shared by the CLI and tests.
//!
//! Sign convention: `s = -1` is normal order, `s = 0` Weyl (symmetric) order
//! and `s = +1` anti-normal order. See [`OrderingParam`].

pub mod egf;
pub mod error;
pub mod hsu_shiue;
pub mod ordering;
pub mod rational;
pub mod riordan;
pub mod series;
pub mod spoly;
pub mod two_point;
pub mod verify;
pub mod weyl;

pub use egf::BivariateEGF;
pub use error::{Error, Result};
pub use hsu_shiue::HSParams;
pub use rational::Rational;
pub use riordan::{Convention, RiordanPair, Triangle};
pub use series::TruncSeries;
pub use spoly::SParamPoly;
pub use two_point::TwoPointParams;
pub use weyl::{
    AntiNormalForm, ClassicalPoly, NormalForm, OrderingParam, SingleAnnihilatorWord, Word,
};
