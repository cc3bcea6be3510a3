//! Permutation statistics, parameterized by a linear order where one
//! applies.
//!
//! On unsigned words the descent and ascent indices range over `1..n`; on
//! signed words the virtual zero letter is prepended, the index range
//! becomes `0..n`, and a word can have up to `n` descents. Excedances
//! compare the pair at position `πᵢ` against the pair at position `i`;
//! the signed variant `bexc` additionally counts negative fixed points.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::order::LinearOrder;
use crate::perm::{ColoredPerm, Letter};

/// Names of the supported statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatName {
    /// Order-relative descents.
    Ldes,
    /// Order-relative ascents.
    Lasc,
    /// Order-relative excedances (unsigned schemes).
    Lexc,
    /// Signed excedances under the symmetric order.
    Bexc,
    /// Classical descents, `Unsigned(1)` only.
    Des,
    /// Classical excedances, `Unsigned(1)` only.
    Exc,
    /// Type B descents, `Signed(1)` only.
    DesB,
    /// Type B excedances, `Signed(1)` only.
    ExcB,
    /// Type B ascents, `n - des_B`.
    AscB,
}

impl StatName {
    pub const ALL: [StatName; 9] = [
        StatName::Ldes,
        StatName::Lasc,
        StatName::Lexc,
        StatName::Bexc,
        StatName::Des,
        StatName::Exc,
        StatName::DesB,
        StatName::ExcB,
        StatName::AscB,
    ];

    /// Whether the statistic takes an explicit linear order.
    pub fn takes_order(self) -> bool {
        matches!(self, StatName::Ldes | StatName::Lasc | StatName::Lexc)
    }
}

impl fmt::Display for StatName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            StatName::Ldes => "ldes",
            StatName::Lasc => "lasc",
            StatName::Lexc => "lexc",
            StatName::Bexc => "bexc",
            StatName::Des => "des",
            StatName::Exc => "exc",
            StatName::DesB => "des_b",
            StatName::ExcB => "exc_b",
            StatName::AscB => "asc_b",
        };
        write!(f, "{name}")
    }
}

impl FromStr for StatName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ldes" => Ok(StatName::Ldes),
            "lasc" => Ok(StatName::Lasc),
            "lexc" => Ok(StatName::Lexc),
            "bexc" => Ok(StatName::Bexc),
            "des" => Ok(StatName::Des),
            "exc" => Ok(StatName::Exc),
            "des_b" => Ok(StatName::DesB),
            "exc_b" => Ok(StatName::ExcB),
            "asc_b" => Ok(StatName::AscB),
            other => Err(Error::OutOfRange(format!("unknown statistic: {other}"))),
        }
    }
}

fn require_order_match(p: &ColoredPerm, order: &LinearOrder) -> Result<()> {
    if order.matches(p.spec()) {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch)
    }
}

/// Word letters with the virtual zero prepended for signed schemes.
fn comparison_word(p: &ColoredPerm) -> Vec<Letter> {
    let mut word = Vec::with_capacity(p.n() + 1);
    if p.spec().scheme().is_signed() {
        word.push(Letter::zero());
    }
    word.extend(p.letters());
    word
}

/// Descent positions. Unsigned: `i ∈ 1..n` with `(πᵢ)_{cᵢ} >_L (πᵢ₊₁)_{cᵢ₊₁}`.
/// Signed: the zero letter is prepended and `i` starts at 0.
pub fn descent_set(p: &ColoredPerm, order: &LinearOrder) -> Result<Vec<usize>> {
    require_order_match(p, order)?;
    let word = comparison_word(p);
    let offset = if p.spec().scheme().is_signed() { 0 } else { 1 };
    let mut out = Vec::new();
    for (k, pair) in word.windows(2).enumerate() {
        if order.greater(pair[0], pair[1])? {
            out.push(k + offset);
        }
    }
    Ok(out)
}

/// Ascent positions over the same index range as [`descent_set`].
pub fn ascent_set(p: &ColoredPerm, order: &LinearOrder) -> Result<Vec<usize>> {
    require_order_match(p, order)?;
    let word = comparison_word(p);
    let offset = if p.spec().scheme().is_signed() { 0 } else { 1 };
    let mut out = Vec::new();
    for (k, pair) in word.windows(2).enumerate() {
        if order.greater(pair[1], pair[0])? {
            out.push(k + offset);
        }
    }
    Ok(out)
}

pub fn ldes(p: &ColoredPerm, order: &LinearOrder) -> Result<usize> {
    Ok(descent_set(p, order)?.len())
}

pub fn lasc(p: &ColoredPerm, order: &LinearOrder) -> Result<usize> {
    Ok(ascent_set(p, order)?.len())
}

/// Excedance positions: `i ∈ 1..=n` with `(π_{πᵢ})_{c_{πᵢ}} >_L (πᵢ)_{cᵢ}`.
/// Unsigned schemes only; the signed counterpart is [`bexc`].
pub fn excedance_set(p: &ColoredPerm, order: &LinearOrder) -> Result<Vec<usize>> {
    if p.spec().scheme().is_signed() {
        return Err(Error::RequiresUnsigned { op: "lexc" });
    }
    require_order_match(p, order)?;
    let mut out = Vec::new();
    for i in 1..=p.n() {
        let here = p.letter(i);
        let successor = p.letter(here.value);
        if order.greater(successor, here)? {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn lexc(p: &ColoredPerm, order: &LinearOrder) -> Result<usize> {
    Ok(excedance_set(p, order)?.len())
}

/// Signed excedance positions: `i` with
/// `(π_{πᵢ})_{c_{πᵢ}} >_sm (πᵢ)_{cᵢ}`, plus fixed points `πᵢ = i` whose
/// color is negative. Uses the symmetric order.
pub fn bexc_set(p: &ColoredPerm) -> Result<Vec<usize>> {
    if !p.spec().scheme().is_signed() {
        return Err(Error::RequiresSigned { op: "bexc" });
    }
    let order = LinearOrder::symmetric(p.n(), p.spec().scheme().d())?;
    let mut out = Vec::new();
    for i in 1..=p.n() {
        let here = p.letter(i);
        if here.value == i {
            if here.color < 0 {
                out.push(i);
            }
            continue;
        }
        let successor = p.letter(here.value);
        if order.greater(successor, here)? {
            out.push(i);
        }
    }
    Ok(out)
}

pub fn bexc(p: &ColoredPerm) -> Result<usize> {
    Ok(bexc_set(p)?.len())
}

fn require_classical(p: &ColoredPerm, stat: StatName) -> Result<()> {
    let ok = match stat {
        StatName::Des | StatName::Exc => p.spec().scheme() == crate::perm::ColorScheme::Unsigned(1),
        StatName::DesB | StatName::ExcB | StatName::AscB => {
            p.spec().scheme() == crate::perm::ColorScheme::Signed(1)
        }
        _ => true,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::StatNotApplicable {
            stat: stat.to_string(),
            scheme: p.spec().scheme().to_string(),
        })
    }
}

/// Classical descents on `Unsigned(1)`.
pub fn des(p: &ColoredPerm) -> Result<usize> {
    require_classical(p, StatName::Des)?;
    ldes(p, &LinearOrder::min_one(p.n(), 1)?)
}

/// Classical excedances on `Unsigned(1)`.
pub fn exc(p: &ColoredPerm) -> Result<usize> {
    require_classical(p, StatName::Exc)?;
    lexc(p, &LinearOrder::min_one(p.n(), 1)?)
}

/// Type B descents: `ldes` under the symmetric order on `Signed(1)`.
pub fn des_b(p: &ColoredPerm) -> Result<usize> {
    require_classical(p, StatName::DesB)?;
    ldes(p, &LinearOrder::symmetric(p.n(), 1)?)
}

/// Type B excedances: `bexc` on `Signed(1)`.
pub fn exc_b(p: &ColoredPerm) -> Result<usize> {
    require_classical(p, StatName::ExcB)?;
    bexc(p)
}

/// Type B ascents, `n - des_B`.
pub fn asc_b(p: &ColoredPerm) -> Result<usize> {
    Ok(p.n() - des_b(p)?)
}

fn need(order: Option<&LinearOrder>, stat: StatName) -> Result<&LinearOrder> {
    order.ok_or_else(|| Error::MissingOrder { stat: stat.to_string() })
}

/// Evaluates any statistic; `order` is required exactly for `ldes`,
/// `lasc`, and `lexc`.
pub fn evaluate(p: &ColoredPerm, stat: StatName, order: Option<&LinearOrder>) -> Result<usize> {
    match stat {
        StatName::Ldes => ldes(p, need(order, stat)?),
        StatName::Lasc => lasc(p, need(order, stat)?),
        StatName::Lexc => lexc(p, need(order, stat)?),
        StatName::Bexc => bexc(p),
        StatName::Des => des(p),
        StatName::Exc => exc(p),
        StatName::DesB => des_b(p),
        StatName::ExcB => exc_b(p),
        StatName::AscB => asc_b(p),
    }
}

/// Index set behind [`evaluate`], for inspection and verbose output.
pub fn index_set(p: &ColoredPerm, stat: StatName, order: Option<&LinearOrder>) -> Result<Vec<usize>> {
    match stat {
        StatName::Ldes => descent_set(p, need(order, stat)?),
        StatName::Lasc => ascent_set(p, need(order, stat)?),
        StatName::Lexc => excedance_set(p, need(order, stat)?),
        StatName::Bexc => bexc_set(p),
        StatName::Des => descent_set(p, &LinearOrder::min_one(p.n(), 1)?),
        StatName::Exc => excedance_set(p, &LinearOrder::min_one(p.n(), 1)?),
        StatName::DesB => {
            require_classical(p, StatName::DesB)?;
            descent_set(p, &LinearOrder::symmetric(p.n(), 1)?)
        }
        StatName::ExcB => {
            require_classical(p, StatName::ExcB)?;
            bexc_set(p)
        }
        StatName::AscB => {
            require_classical(p, StatName::AscB)?;
            ascent_set(p, &LinearOrder::symmetric(p.n(), 1)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate, ColoredPerm, GroupSpec};

    fn running_example() -> ColoredPerm {
        ColoredPerm::new(
            vec![2, 4, 1, 5, 6, 3],
            vec![0, 1, 3, 3, 0, 2],
            GroupSpec::unsigned(6, 4).unwrap(),
        )
        .unwrap()
    }

    /// Builds a signed permutation from one-line signed notation.
    pub(crate) fn signed_word(word: &[i32]) -> ColoredPerm {
        let spec = GroupSpec::signed(word.len(), 1).unwrap();
        let values = word.iter().map(|&k| k.unsigned_abs() as usize).collect();
        let colors = word.iter().map(|&k| k.signum()).collect();
        ColoredPerm::new(values, colors, spec).unwrap()
    }

    #[test]
    fn worked_example_statistics() {
        let p = running_example();
        let order = LinearOrder::color_major(6, 4).unwrap();
        assert_eq!(ldes(&p, &order).unwrap(), 1);
        assert_eq!(descent_set(&p, &order).unwrap(), vec![4]); // 5_3 > 6_0
        assert_eq!(lexc(&p, &order).unwrap(), 4);
        assert_eq!(excedance_set(&p, &order).unwrap(), vec![1, 2, 5, 6]);
    }

    #[test]
    fn identity_has_no_descents() {
        for order in [
            LinearOrder::color_major(4, 2).unwrap(),
            LinearOrder::min_one(4, 2).unwrap(),
        ] {
            let id = ColoredPerm::identity(GroupSpec::unsigned(4, 2).unwrap());
            assert_eq!(ldes(&id, &order).unwrap(), 0);
            assert_eq!(lasc(&id, &order).unwrap(), 3);
            assert_eq!(lexc(&id, &order).unwrap(), 0);
        }
    }

    #[test]
    fn descents_and_ascents_partition_positions() {
        let spec = GroupSpec::unsigned(4, 2).unwrap();
        for seed in 0..5 {
            let order = LinearOrder::random(4, 2, seed).unwrap();
            for p in enumerate(spec).unwrap() {
                assert_eq!(ldes(&p, &order).unwrap() + lasc(&p, &order).unwrap(), 3);
            }
        }
        // signed words compare against the zero letter too
        let spec = GroupSpec::signed(3, 2).unwrap();
        let order = LinearOrder::symmetric(3, 2).unwrap();
        for p in enumerate(spec).unwrap() {
            assert_eq!(ldes(&p, &order).unwrap() + lasc(&p, &order).unwrap(), 3);
        }
    }

    #[test]
    fn lasc_is_ldes_of_reverse() {
        let order = LinearOrder::min_one(3, 2).unwrap();
        for p in enumerate(GroupSpec::unsigned(3, 2).unwrap()).unwrap() {
            assert_eq!(
                lasc(&p, &order).unwrap(),
                ldes(&p.reverse().unwrap(), &order).unwrap()
            );
        }
    }

    #[test]
    fn reversed_order_swaps_descents_and_ascents() {
        let order = LinearOrder::color_major(3, 2).unwrap();
        let rev = order.reversed();
        for p in enumerate(GroupSpec::unsigned(3, 2).unwrap()).unwrap() {
            assert_eq!(ldes(&p, &rev).unwrap(), lasc(&p, &order).unwrap());
        }
    }

    #[test]
    fn lexc_reduces_to_exc_when_one_color() {
        let spec = GroupSpec::unsigned(4, 1).unwrap();
        let order = LinearOrder::min_one(4, 1).unwrap();
        for p in enumerate(spec).unwrap() {
            // |{i : π_i > i}| directly
            let direct = p
                .values()
                .iter()
                .enumerate()
                .filter(|&(i, &v)| v > i + 1)
                .count();
            assert_eq!(lexc(&p, &order).unwrap(), direct);
            assert_eq!(exc(&p).unwrap(), direct);
        }
    }

    #[test]
    fn signed_descents_count_the_zero_comparison() {
        assert_eq!(des_b(&signed_word(&[-1, -2])).unwrap(), 2);
        assert_eq!(des_b(&signed_word(&[1, -2])).unwrap(), 1);
        assert_eq!(des_b(&signed_word(&[-1, 2])).unwrap(), 1);
        assert_eq!(descent_set(&signed_word(&[-1, -2]), &LinearOrder::symmetric(2, 1).unwrap()).unwrap(), vec![0, 1]);
        assert_eq!(asc_b(&signed_word(&[-1, -2])).unwrap(), 0);
    }

    #[test]
    fn bexc_hand_evaluations() {
        assert_eq!(bexc(&signed_word(&[-1, 2])).unwrap(), 1); // negative fixed point
        assert_eq!(bexc_set(&signed_word(&[-1, 2])).unwrap(), vec![1]);
        assert_eq!(bexc(&signed_word(&[2, 1])).unwrap(), 1); // π_{π_2} = 2 > 1
        assert_eq!(bexc_set(&signed_word(&[2, 1])).unwrap(), vec![2]);
    }

    #[test]
    fn bexc_and_desb_distributions_agree_on_b2() {
        let spec = GroupSpec::signed(2, 1).unwrap();
        let mut by_des = [0u32; 3];
        let mut by_bexc = [0u32; 3];
        for p in enumerate(spec).unwrap() {
            by_des[des_b(&p).unwrap()] += 1;
            by_bexc[bexc(&p).unwrap()] += 1;
        }
        assert_eq!(by_des, [1, 6, 1]);
        assert_eq!(by_bexc, [1, 6, 1]);
    }

    #[test]
    fn bexc_matches_direct_signed_excedance_on_b4() {
        // Direct reading on signed integers: σ(|σ_i|) > σ_i or σ_i = -i.
        let spec = GroupSpec::signed(4, 1).unwrap();
        for p in enumerate(spec).unwrap() {
            let sigma: Vec<i32> = p
                .values()
                .iter()
                .zip(p.colors())
                .map(|(&v, &c)| c * v as i32)
                .collect();
            let direct = (1..=4)
                .filter(|&i| {
                    let s = sigma[i - 1];
                    sigma[s.unsigned_abs() as usize - 1] > s || s == -(i as i32)
                })
                .count();
            assert_eq!(bexc(&p).unwrap(), direct, "disagrees at {p}");
        }
    }

    #[test]
    fn classical_stats_guard_their_schemes() {
        let p21 = ColoredPerm::new(vec![2, 1], vec![0, 0], GroupSpec::unsigned(2, 1).unwrap()).unwrap();
        assert_eq!(des(&p21).unwrap(), 1);
        assert_eq!(exc(&p21).unwrap(), 1);
        let colored = ColoredPerm::identity(GroupSpec::unsigned(2, 2).unwrap());
        assert!(des(&colored).is_err());
        assert!(exc_b(&colored).is_err());
        let signed = signed_word(&[1, 2]);
        assert!(bexc(&colored).is_err());
        assert_eq!(exc_b(&signed).unwrap(), 0);
        // order over the wrong alphabet is rejected
        let wrong = LinearOrder::color_major(3, 1).unwrap();
        assert!(ldes(&p21, &wrong).is_err());
    }

    #[test]
    fn evaluate_dispatches_and_requires_orders() {
        let p = running_example();
        let order = LinearOrder::color_major(6, 4).unwrap();
        assert_eq!(evaluate(&p, StatName::Ldes, Some(&order)).unwrap(), 1);
        assert_eq!(evaluate(&p, StatName::Lexc, Some(&order)).unwrap(), 4);
        assert!(matches!(
            evaluate(&p, StatName::Ldes, None),
            Err(Error::MissingOrder { .. })
        ));
        assert_eq!(index_set(&p, StatName::Ldes, Some(&order)).unwrap(), vec![4]);
    }
}
