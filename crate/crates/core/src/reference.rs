//! Printed closed forms used as calibration oracles.
//!
//! The strings are transcriptions of published polynomials in the compact
//! notation of [`MultiPoly::parse_compact`]; term order follows the source.

use std::sync::OnceLock;

use crate::multipoly::MultiPoly;
use crate::field::Rationals;

pub const A0_VARS: [&str; 6] = ["a1", "a2", "a3", "a4", "a5", "a6"];
pub const B_VARS: [&str; 4] = ["B0", "B1", "B2", "B3"];
pub const PAIR_VARS: [&str; 8] = ["A0", "A1", "A2", "A3", "B0", "B1", "B2", "B3"];

/// a0 = 0 specialization of I2, variables a1..a6.
pub const SEXTIC_I2_A0: &str = "-20 a1 a5 + 8 a2 a4 - 3 a3^2 ";
pub const SEXTIC_I4_A0: &str = concat!(
    "-24000 a1^2 a4 a6 + 10000 a1^2 a5^2 + 14400 a1 a3 a2 a6 - 1800 a1 a3^2 a5 - 3200 a1 a4 a2 a5 ",
    "+ 960 a1 a3 a4^2 - 3840 a2^3 a6 + 960 a2^2 a3 a5 + 256 a2^2 a4^2 - 432 a2 a4 a3^2 ",
    "+ 81 a3^4 "
);
pub const SEXTIC_I6_A0: &str = concat!(
    "100 a1 a3^4 a5 - 40 a1 a3^3 a4^2 + 6250 a1^3 a3 a6^2 - 160 a2^4 a4 a6 + 60 a2^3 a3^2 a6 ",
    "- 40 a2^2 a3^3 a5 - 8 a2^2 a3^2 a4^2 - 2500 a2^2 a1^2 a6^2 + 8 a2 a3^4 a4 - 2500 a1^2 a3 a6 a2 a5 ",
    "- 100 a2^4 a5^2 - 24 a2^3 a4^3 - 350 a1 a3^2 a2 a4 a5 + 300 a1 a3 a2^2 a4 a6 + 1000 a2^3 a1 a6 a5 ",
    "- 100 a1^2 a4^4 - a3^6 + 250 a1^2 a3^2 a6 a4 + 250 a1^2 a4^2 a3 a5 - 100 a1 a4^2 a2^2 a5 ",
    "+ 250 a1 a3 a2^2 a5^2 + 140 a2^3 a4 a3 a5 - 150 a1 a3^3 a2 a6 + 140 a1 a3 a2 a4^3 "
);

/// B-form polynomials, variables B0..B3.
pub const J2: &str = "-12 B0 B3 + 8 B0 B2 + 2 B1 B2 + 8 B1 B3 - 3 B1^2 - 3 B2^2 ";
pub const J4: &str = concat!(
    "-432 B0 B2 B1^2 + 608 B3 B1^2 B2 - 312 B0 B3 B1^2 - 1728 B0^2 B3 B2 + 960 B0 B2 B3^2 ",
    "- 432 B1 B3 B2^2 - 312 B0 B3 B2^2 - 1728 B0 B3^2 B1 + 608 B0 B1 B2^2 + 960 B3 B0^2 B1 ",
    "- 2800 B0 B3 B1 B2 + 7056 B0^2 B3^2 + 528 B0 B2^3 + 528 B3 B1^3 + 256 B0^2 B2^2 ",
    "- 122 B1^2 B2^2 + 256 B1^2 B3^2 - 108 B1^3 B2 - 108 B1 B2^3 + 81 B1^4 + 81 B2^4 "
);
pub const J6: &str = concat!(
    "-36 B3 B1^3 B2^2 + 118 B0^3 B3^2 B2 - 24 B0 B1^3 B2^2 - 8 B1^2 B2^2 B3^2 - 36 B0 B1^2 B2^3 ",
    "- 24 B0^3 B2^3 - 124 B0^3 B3^3 - 24 B1^3 B3^3 - 136 B3 B0^2 B2^3 + 8 B1 B2^4 B3 ",
    "+ 52 B1^3 B2 B3^2 + 36 B0 B1 B2^4 - 32 B3 B0^3 B2^2 - 32 B0 B1^2 B3^3 - 100 B3^2 B0^4 ",
    "- B1^6 - B2^6 - 40 B0 B2^3 B3^2 - 10 B0^3 B3^2 B1 + 28 B0 B2^4 B3 + 8 B0 B1^4 B2 ",
    "- 8 B0^2 B1^2 B2^2 - 38 B0^2 B2^2 B3^2 + 140 B3 B0^3 B2 B1 - 100 B0^2 B3^4 + 36 B3 B1^4 B2 ",
    "- 136 B0 B1^3 B3^2 - 38 B0^2 B1^2 B3^2 - 40 B3 B0^2 B1^3 + 52 B0^2 B1 B2^3 - 10 B0^2 B2 B3^3 ",
    "+ 118 B0^2 B1 B3^3 - 24 B3 B1^2 B2^3 + 28 B3 B0 B1^4 - 32 B0 B2^5 - 32 B3 B1^5 + 2 B1^5 B2 ",
    "+ 9 B1^4 B2^2 - 12 B1^3 B2^3 + 9 B1^2 B2^4 + 2 B1 B2^5 + 32 B0^2 B2^4 + 32 B1^4 B3^2 ",
    "+ 150 B0 B1^3 B2 B3 - 72 B0 B1^2 B2^2 B3 - 178 B0 B1^2 B2 B3^2 + 150 B0 B1 B2^3 B3 ",
    "- 66 B0 B1 B2^2 B3^2 - 66 B3 B0^2 B1^2 B2 - 178 B3 B0^2 B1 B2^2 + 508 B0^2 B1 B2 B3^2 ",
    "+ 140 B0 B1 B2 B3^3 "
);
pub const J10: &str = concat!(
    "-37540800 B0^4 B3^5 B1 - 37540800 B0^5 B3^4 B2 + 148500 B0^3 B3^3 B2^4 + 148500 B0^3 B3^3 B1^4 ",
    "- 4028400 B0^4 B3^4 B1^2 - 860400 B0^2 B3^4 B1^4 + 5308200 B0^3 B3^4 B1^3 + 6696000 B0^5 B3^4 B1 ",
    "+ 6696000 B3^5 B0^4 B2 + 5308200 B3^3 B0^4 B2^3 - 860400 B3^2 B0^4 B2^4 - 27000 B0^3 B3^4 B2^3 ",
    "- 27000 B0^3 B3^2 B2^5 - 25600 B0^2 B3^5 B1^3 - 100800 B0^3 B3^5 B1^2 - 44287200 B0^4 B3^4 B1 B2 ",
    "- 100800 B0^5 B3^3 B2^2 - 25600 B0^5 B3^2 B2^3 - 27000 B0^2 B3^3 B1^5 - 27000 B0^4 B3^3 B1^3 ",
    "- 4028400 B0^4 B3^4 B2^2 - 1854600 B0^3 B3^3 B1^2 B2^2 - 543600 B0^3 B3^3 B1 B2^3 ",
    "+ 7719000 B0^3 B3^4 B1^2 B2 + 7719000 B0^4 B3^3 B1 B2^2 - 19800 B0^3 B3^2 B1^3 B2^2 ",
    "- 543600 B0^3 B3^3 B1^3 B2 + 72600 B0^3 B3^2 B1^2 B2^3 + 142200 B0^3 B3^2 B1 B2^4 ",
    "- 1225800 B0^3 B3^4 B1 B2^2 + 142200 B0^2 B3^3 B1^4 B2 + 351734400 B0^5 B3^5 + 72600 B0^2 B3^3 B1^3 B2^2 ",
    "- 19800 B0^2 B3^3 B1^2 B2^3 + 146400 B0^4 B3^2 B1 B2^3 + 146400 B0^2 B3^4 B1^3 B2 ",
    "- 18400 B0^2 B3^2 B1^3 B2^3 + 3600 B0^2 B3^4 B1^2 B2^2 + 3600 B0^4 B3^2 B1^2 B2^2 ",
    "+ 3600 B0^2 B3^2 B1^4 B2^2 + 3600 B0^2 B3^2 B1^2 B2^4 - 1225800 B0^4 B3^3 B1^2 B2 ",
    "- 1080000 B3^6 B0^4 - 1080000 B0^6 B3^4 + 216000 B0^3 B3^5 B1 B2 + 216000 B0^5 B3^3 B2 B1 "
);

/// Cubic pair invariants in A0..A3 (first cubic) and B0..B3 (second).
pub const PAIR_H: &str = "3 A0 B3 - A1 B2 + A2 B1 - 3 A3 B0 ";
pub const PAIR_I: &str = concat!(
    "228 A0 B0 A3 B3 - 52 A1 B0 A3 B2 - 24 A1 B0 A2 B3 - 24 A0 B1 A3 B2 - 52 A0 B1 A2 B3 ",
    "+ 4 A2 B0 A3 B1 + 16 A2^2 B0 B2 + 16 A1 B1^2 A3 + 4 A1 B1 A2 B2 + 16 A1^2 B1 B3 ",
    "+ 16 A0 B2^2 A2 + 4 A0 B2 A1 B3 - 6 A3^2 B0^2 - 6 A2^2 B1^2 - 6 A1^2 B2^2 - 6 A0^2 B3^2 "
);
pub const PAIR_R: &str = concat!(
    "3 B0^2 A0 B3 A3^2 - B0^3 A3^3 + 2 B0^2 A3^2 B2 A1 - B2^2 B0 A1^2 A3 - A0^2 B2^3 A3 ",
    "+ B0^2 A2 B1 A3^2 - B0^2 A2^2 B2 A3 - B1^2 B0 A1 A3^2 + A0 B1^3 A3^2 - 3 B0 A0^2 B3^2 A3 ",
    "- B0 A1^3 B3^2 + A0^3 B3^3 + B0^2 A2^3 B3 - B0 A0 B3 B2 A1 A3 + 3 A0^2 B3 B2 B1 A3 ",
    "+ B0 A3 B3 A0 B1 A2 + 3 B0 A0 B3^2 A1 A2 - 2 A0^2 B3^2 B1 A2 - 3 B0 A3^2 B2 A0 B1 ",
    "- 3 B0^2 A3 B3 A1 A2 - B2 A1 A0^2 B3^2 + B2^2 A1 A0 B1 A3 + B2 B0 A1^2 B3 A2 - B2 A1 B3 A0 B1 A2 ",
    "+ A0^2 B2^2 A2 B3 + 2 B0 A0 B2^2 A2 A3 - 2 B0 A0 B2 B3 A2^2 - 2 B1^2 A1 A3 A0 B3 ",
    "+ B1 A1^2 B3^2 A0 + 2 B1 B0 A1^2 B3 A3 + B1 B0 A1 B2 A2 A3 - B1 B0 A1 B3 A2^2 - A0 B1^2 B2 A2 A3 ",
    "+ A0 B1^2 B3 A2^2 "
);

/// D is the product of these two cubic discriminants.
pub const PAIR_D_FIRST: &str = "-27 A0^2 A3^2 + 18 A0 A3 A2 A1 + A1^2 A2^2 - 4 A1^3 A3 - 4 A2^3 A0 ";
pub const PAIR_D_SECOND: &str = "-27 B0^2 B3^2 + 18 B0 B3 B2 B1 + B1^2 B2^2 - 4 B1^3 B3 - 4 B2^3 B0 ";

/// Two-cubic specializations at `(XY(X-Y), B0 X^3 + B1 X^2 Y + B2 X Y^2 + B3 Y^3)`.
pub const TILDE_H: &str = "- B1 - B2";
pub const TILDE_I: &str = "24 B3 B0 + 16 B2 B0 - 4 B1 B2 + 16 B1 B3 - 6 B1^2 - 6 B2^2";
pub const TILDE_R: &str = "B0^2 B3 + B0 B1 B3 + B0 B2 B3 + B0 B3^2";
pub const TILDE_D: &str = "-4 B0 B2^3 + B1^2 B2^2 + 18 B0 B1 B2 B3 - 4 B1^3 B3 - 27 B0^2 B3^2";

fn parse(text: &str, vars: &[&str]) -> MultiPoly<Rationals> {
    MultiPoly::parse_compact(text, vars).expect("embedded polynomial parses")
}

/// `I2, I4, I6` with `a0 = 0`, in `a1..a6`.
pub fn sextic_a0() -> &'static [MultiPoly<Rationals>; 3] {
    static CELL: OnceLock<[MultiPoly<Rationals>; 3]> = OnceLock::new();
    CELL.get_or_init(|| {
        [SEXTIC_I2_A0, SEXTIC_I4_A0, SEXTIC_I6_A0].map(|t| parse(t, &A0_VARS))
    })
}

/// `J2, J4, J6, J10` in `B0..B3`.
pub fn j_polys() -> &'static [MultiPoly<Rationals>; 4] {
    static CELL: OnceLock<[MultiPoly<Rationals>; 4]> = OnceLock::new();
    CELL.get_or_init(|| [J2, J4, J6, J10].map(|t| parse(t, &B_VARS)))
}

/// `H, I, R, D` in `A0..A3, B0..B3`.
pub fn pair_polys() -> &'static [MultiPoly<Rationals>; 4] {
    static CELL: OnceLock<[MultiPoly<Rationals>; 4]> = OnceLock::new();
    CELL.get_or_init(|| {
        let d = parse(PAIR_D_FIRST, &PAIR_VARS).mul(&parse(PAIR_D_SECOND, &PAIR_VARS));
        [
            parse(PAIR_H, &PAIR_VARS),
            parse(PAIR_I, &PAIR_VARS),
            parse(PAIR_R, &PAIR_VARS),
            d,
        ]
    })
}

/// `H~, I~, R~, D~` in `B0..B3`.
pub fn tilde_polys() -> &'static [MultiPoly<Rationals>; 4] {
    static CELL: OnceLock<[MultiPoly<Rationals>; 4]> = OnceLock::new();
    CELL.get_or_init(|| [TILDE_H, TILDE_I, TILDE_R, TILDE_D].map(|t| parse(t, &B_VARS)))
}
