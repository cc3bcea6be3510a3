//! The three statistic-transporting bijections and their inverses.
//!
//! All three run through the decorated cycle form. Writing the cycle entry
//! for value `v` with the color `v` carries in the word makes consecutive
//! cycle entries exactly the pairs `(πᵢ, cᵢ) → (π_{πᵢ}, c_{πᵢ})` compared
//! by the excedance statistics, so rotating cycles and concatenating turns
//! excedances into adjacent comparisons:
//!
//! * [`phi`] — for an arbitrary order `L`, rotate every cycle so its
//!   `L`-largest entry is last, sort cycles by last entry descending,
//!   concatenate, and reverse. Sends `lexc` to `ldes`.
//! * [`gamma_min_one`] — replace every cycle entry by its image under the
//!   letter involution `s(i, j) = (n+2-i, d-1-j)` (value 1 keeps its
//!   value), rotate each cycle so its min-one-smallest entry is last, sort
//!   cycles by last entry ascending, concatenate. Sends `lexc` to `ldes`
//!   under the min-one order and maps the first-letter class of `(i, j)`
//!   onto the class of `s(i, j)`.
//! * [`gamma_symmetric`] — on signed words, negate the colors of all
//!   non-fixed-point entries, rotate each cycle so its smallest value is
//!   last, sort cycles by last value ascending, concatenate. Sends `bexc`
//!   to `ldes` under the symmetric order; first-letter classes swap color
//!   sign except at value 1, whose class is preserved.
//!
//! Each inverse re-splits the output word after its right-to-left extrema
//! (maxima for [`phi`], min-one minima for [`gamma_min_one`], value minima
//! for [`gamma_symmetric`]): those positions are exactly where the forward
//! direction closed a cycle.

use crate::error::{Error, Result};
use crate::order::LinearOrder;
use crate::perm::{ColoredPerm, CycleForm, Letter};

/// The letter involution behind [`gamma_min_one`]: values reflect through
/// `n + 2` (with 1 fixed) and colors reflect through the color range.
#[derive(Debug, Clone, Copy)]
pub struct PairMapS {
    n: usize,
    d: u32,
}

impl PairMapS {
    pub fn new(n: usize, d: u32) -> Self {
        PairMapS { n, d }
    }

    pub fn apply(&self, letter: Letter) -> Letter {
        let value = if letter.value == 1 { 1 } else { self.n + 2 - letter.value };
        let color = self.d as i32 - 1 - letter.color;
        Letter::new(value, color)
    }
}

/// The color-flip involution behind [`gamma_symmetric`].
#[derive(Debug, Clone, Copy)]
pub struct PairMapT;

impl PairMapT {
    pub fn apply(&self, letter: Letter) -> Letter {
        Letter::new(letter.value, -letter.color)
    }
}

fn require_unsigned(p: &ColoredPerm, op: &'static str) -> Result<()> {
    if p.spec().scheme().is_signed() {
        Err(Error::RequiresUnsigned { op })
    } else {
        Ok(())
    }
}

fn require_signed(p: &ColoredPerm, op: &'static str) -> Result<()> {
    if p.spec().scheme().is_signed() {
        Ok(())
    } else {
        Err(Error::RequiresSigned { op })
    }
}

/// Rotates `cycle` so that its extreme entry under `key` comes last.
/// `key` must be injective on the cycle's entries.
fn rotate_extreme_last<K: Ord>(cycle: &mut [Letter], key: impl Fn(Letter) -> K) {
    let pos = cycle
        .iter()
        .enumerate()
        .max_by_key(|(_, &l)| key(l))
        .map(|(i, _)| i)
        .expect("cycles are nonempty");
    let shift = (pos + 1) % cycle.len();
    cycle.rotate_left(shift);
}

/// Splits `word` into the maximal blocks whose final letters are the
/// right-to-left extrema under `key` (an entry is an extremum when its key
/// beats everything to its right).
fn split_after_right_to_left_extrema<K: Ord>(
    word: &[Letter],
    key: impl Fn(Letter) -> K,
) -> Vec<Vec<Letter>> {
    let mut blocks = Vec::new();
    let mut block_start = 0;
    let mut best: Option<K> = None;
    let mut ends = Vec::new();
    for (i, &letter) in word.iter().enumerate().rev() {
        let k = key(letter);
        if best.as_ref().is_none_or(|b| k > *b) {
            best = Some(k);
            ends.push(i);
        }
    }
    ends.reverse();
    for end in ends {
        blocks.push(word[block_start..=end].to_vec());
        block_start = end + 1;
    }
    blocks
}

fn assemble(letters: Vec<Letter>, like: &ColoredPerm) -> ColoredPerm {
    let values = letters.iter().map(|l| l.value).collect();
    let colors = letters.iter().map(|l| l.color).collect();
    ColoredPerm::from_parts_unchecked(values, colors, like.spec())
}

/// Order-transporting bijection: `ldes(phi(p), L) = lexc(p, L)` for every
/// linear order `L` on the unsigned alphabet.
pub fn phi(p: &ColoredPerm, order: &LinearOrder) -> Result<ColoredPerm> {
    require_unsigned(p, "phi")?;
    if !order.matches(p.spec()) {
        return Err(Error::AlphabetMismatch);
    }
    let mut cycles = p.cycle_decomposition().cycles().to_vec();
    for cycle in &mut cycles {
        rotate_extreme_last(cycle, |l| order.rank(l).unwrap());
    }
    // largest cycle maximum first
    cycles.sort_by_key(|c| std::cmp::Reverse(order.rank(*c.last().unwrap()).unwrap()));
    let mut word: Vec<Letter> = cycles.into_iter().flatten().collect();
    word.reverse();
    Ok(assemble(word, p))
}

/// Two-sided inverse of [`phi`].
pub fn phi_inverse(w: &ColoredPerm, order: &LinearOrder) -> Result<ColoredPerm> {
    require_unsigned(w, "phi_inverse")?;
    if !order.matches(w.spec()) {
        return Err(Error::AlphabetMismatch);
    }
    let mut letters = w.letters();
    letters.reverse();
    let cycles = split_after_right_to_left_extrema(&letters, |l| order.rank(l).unwrap());
    CycleForm::new(w.spec(), cycles)?.to_perm()
}

/// Min-one specialization with a first-letter class map: the class of
/// `(i, j)` lands on the class of `s(i, j)`.
pub fn gamma_min_one(p: &ColoredPerm) -> Result<ColoredPerm> {
    require_unsigned(p, "gamma_min_one")?;
    let order = LinearOrder::min_one(p.n(), p.spec().scheme().d())?;
    let s = PairMapS::new(p.n(), p.spec().scheme().d());
    let mut cycles = p.cycle_decomposition().cycles().to_vec();
    for cycle in &mut cycles {
        for letter in cycle.iter_mut() {
            *letter = s.apply(*letter);
        }
        // smallest entry last
        rotate_extreme_last(cycle, |l| std::cmp::Reverse(order.rank(l).unwrap()));
    }
    // smallest cycle minimum first
    cycles.sort_by_key(|c| order.rank(*c.last().unwrap()).unwrap());
    let word: Vec<Letter> = cycles.into_iter().flatten().collect();
    Ok(assemble(word, p))
}

/// Two-sided inverse of [`gamma_min_one`].
pub fn gamma_min_one_inverse(w: &ColoredPerm) -> Result<ColoredPerm> {
    require_unsigned(w, "gamma_min_one_inverse")?;
    let order = LinearOrder::min_one(w.n(), w.spec().scheme().d())?;
    let s = PairMapS::new(w.n(), w.spec().scheme().d());
    let letters = w.letters();
    let mut cycles =
        split_after_right_to_left_extrema(&letters, |l| std::cmp::Reverse(order.rank(l).unwrap()));
    for cycle in &mut cycles {
        for letter in cycle.iter_mut() {
            *letter = s.apply(*letter);
        }
    }
    CycleForm::new(w.spec(), cycles)?.to_perm()
}

/// Signed-word bijection: `ldes(gamma_symmetric(p), symmetric) = bexc(p)`.
/// Fixed points keep their color; every other entry has its color negated.
pub fn gamma_symmetric(p: &ColoredPerm) -> Result<ColoredPerm> {
    require_signed(p, "gamma_symmetric")?;
    let t = PairMapT;
    let mut cycles = p.cycle_decomposition().cycles().to_vec();
    for cycle in &mut cycles {
        if cycle.len() > 1 {
            for letter in cycle.iter_mut() {
                *letter = t.apply(*letter);
            }
        }
        // smallest value last
        rotate_extreme_last(cycle, |l| std::cmp::Reverse(l.value));
    }
    // cycles ordered by their minimal values ascending
    cycles.sort_by_key(|c| c.last().unwrap().value);
    let word: Vec<Letter> = cycles.into_iter().flatten().collect();
    Ok(assemble(word, p))
}

/// Two-sided inverse of [`gamma_symmetric`].
pub fn gamma_symmetric_inverse(w: &ColoredPerm) -> Result<ColoredPerm> {
    require_signed(w, "gamma_symmetric_inverse")?;
    let t = PairMapT;
    let letters = w.letters();
    let mut cycles = split_after_right_to_left_extrema(&letters, |l| std::cmp::Reverse(l.value));
    for cycle in &mut cycles {
        if cycle.len() > 1 {
            for letter in cycle.iter_mut() {
                *letter = t.apply(*letter);
            }
        }
    }
    CycleForm::new(w.spec(), cycles)?.to_perm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate, GroupSpec};
    use crate::stats::{bexc, des_b, ldes, lexc};
    use std::collections::HashSet;

    fn unsigned(n: usize, d: u32) -> GroupSpec {
        GroupSpec::unsigned(n, d).unwrap()
    }

    fn plain(word: &[usize]) -> ColoredPerm {
        ColoredPerm::new(word.to_vec(), vec![0; word.len()], unsigned(word.len(), 1)).unwrap()
    }

    fn signed_word(word: &[i32]) -> ColoredPerm {
        let spec = GroupSpec::signed(word.len(), 1).unwrap();
        let values = word.iter().map(|&k| k.unsigned_abs() as usize).collect();
        let colors = word.iter().map(|&k| k.signum()).collect();
        ColoredPerm::new(values, colors, spec).unwrap()
    }

    #[test]
    fn phi_on_the_worked_example() {
        let p = ColoredPerm::new(vec![2, 4, 1, 5, 6, 3], vec![0, 1, 3, 3, 0, 2], unsigned(6, 4)).unwrap();
        let order = LinearOrder::color_major(6, 4).unwrap();
        let image = phi(&p, &order).unwrap();
        assert_eq!(image.to_string(), "5_3 4_1 2_0 1_3 3_2 6_0");
        assert_eq!(ldes(&image, &order).unwrap(), 4);
        assert_eq!(lexc(&p, &order).unwrap(), 4);
        assert_eq!(phi_inverse(&image, &order).unwrap(), p);
    }

    #[test]
    fn phi_sends_identity_to_a_descent_free_word() {
        for seed in 0..10 {
            let order = LinearOrder::random(4, 2, seed).unwrap();
            let id = ColoredPerm::identity(unsigned(4, 2));
            let image = phi(&id, &order).unwrap();
            assert_eq!(ldes(&image, &order).unwrap(), 0);
        }
    }

    #[test]
    fn phi_transports_the_statistic_and_is_bijective() {
        let spec = unsigned(4, 2);
        for seed in 0..50 {
            let order = LinearOrder::random(4, 2, seed).unwrap();
            let mut seen = HashSet::new();
            for p in enumerate(spec).unwrap() {
                let image = phi(&p, &order).unwrap();
                assert_eq!(
                    ldes(&image, &order).unwrap(),
                    lexc(&p, &order).unwrap(),
                    "statistic mismatch at {p} under seed {seed}"
                );
                assert_eq!(phi_inverse(&image, &order).unwrap(), p);
                assert!(seen.insert(image.to_string()), "collision under seed {seed}");
            }
            assert_eq!(seen.len(), 384);
        }
    }

    #[test]
    fn phi_inverse_on_singleton_group() {
        let order = LinearOrder::min_one(1, 1).unwrap();
        let id = ColoredPerm::identity(unsigned(1, 1));
        assert_eq!(phi(&id, &order).unwrap(), id);
        assert_eq!(phi_inverse(&id, &order).unwrap(), id);
    }

    #[test]
    fn pair_map_s_is_an_involution_fixing_value_one() {
        let s = PairMapS::new(6, 4);
        for v in 1..=6 {
            for c in 0..4 {
                let letter = Letter::new(v, c);
                let image = s.apply(letter);
                assert_eq!(s.apply(image), letter);
                if v == 1 {
                    assert_eq!(image.value, 1);
                } else {
                    assert_eq!(image.value, 8 - v);
                }
            }
        }
        // at d = 1 the color component is fixed
        let s = PairMapS::new(9, 1);
        assert_eq!(s.apply(Letter::new(8, 0)), Letter::new(3, 0));
        assert_eq!(s.apply(Letter::new(1, 0)), Letter::new(1, 0));
    }

    #[test]
    fn gamma_min_one_on_plain_permutations() {
        // 2-cycle: excedance count 1 goes to descent count 1.
        let image = gamma_min_one(&plain(&[2, 1])).unwrap();
        assert_eq!(image, plain(&[2, 1]));

        // A 9-letter word with exc = 3 lands on a word with des = 3 that
        // starts with n + 2 - 8 = 3.
        let p = plain(&[8, 9, 1, 6, 2, 4, 3, 7, 5]);
        let image = gamma_min_one(&p).unwrap();
        let order = LinearOrder::min_one(9, 1).unwrap();
        assert_eq!(lexc(&p, &order).unwrap(), 3);
        assert_eq!(ldes(&image, &order).unwrap(), 3);
        assert_eq!(image.values()[0], 3);
        assert_eq!(gamma_min_one_inverse(&image).unwrap(), p);
    }

    #[test]
    fn gamma_min_one_statistic_and_class_map_exhaustively() {
        for (n, d) in [(2, 2), (3, 2), (4, 2), (3, 3)] {
            let spec = unsigned(n, d as u32);
            let order = LinearOrder::min_one(n, d as u32).unwrap();
            let s = PairMapS::new(n, d as u32);
            let mut seen = HashSet::new();
            for p in enumerate(spec).unwrap() {
                let image = gamma_min_one(&p).unwrap();
                assert_eq!(ldes(&image, &order).unwrap(), lexc(&p, &order).unwrap());
                assert_eq!(image.letter(1), s.apply(p.letter(1)), "class map broke at {p}");
                assert_eq!(gamma_min_one_inverse(&image).unwrap(), p);
                assert!(seen.insert(image.to_string()));
            }
        }
    }

    #[test]
    fn gamma_min_one_class_generating_functions_match() {
        // ldes over the class of 2_1 equals lexc over the class of 2_0.
        use crate::perm::first_letter_class;
        let spec = unsigned(2, 2);
        let order = LinearOrder::min_one(2, 2).unwrap();
        let mut exc_counts = Vec::new();
        for p in first_letter_class(spec, Letter::new(2, 0)).unwrap() {
            exc_counts.push(lexc(&p, &order).unwrap());
        }
        let mut des_counts = Vec::new();
        for p in first_letter_class(spec, Letter::new(2, 1)).unwrap() {
            des_counts.push(ldes(&p, &order).unwrap());
        }
        exc_counts.sort_unstable();
        des_counts.sort_unstable();
        assert_eq!(exc_counts, vec![1, 1]);
        assert_eq!(exc_counts, des_counts);
    }

    #[test]
    fn gamma_symmetric_hand_traces() {
        // negative fixed point keeps its color and forces one descent
        let p = signed_word(&[-1, 2]);
        let image = gamma_symmetric(&p).unwrap();
        assert_eq!(bexc(&p).unwrap(), 1);
        assert_eq!(des_b(&image).unwrap(), 1);
        assert_eq!(image, signed_word(&[-1, 2]));

        let p = signed_word(&[2, 1]);
        let image = gamma_symmetric(&p).unwrap();
        assert_eq!(image, signed_word(&[-2, -1]));
        assert_eq!(des_b(&image).unwrap(), 1);
        assert_eq!(gamma_symmetric_inverse(&image).unwrap(), p);

        // all-positive identity keeps ldes = 0
        let id = signed_word(&[1, 2, 3]);
        assert_eq!(des_b(&gamma_symmetric(&id).unwrap()).unwrap(), 0);
    }

    #[test]
    fn gamma_symmetric_statistic_and_class_swap_exhaustively() {
        // hyperoctahedral groups up to n = 4
        for n in 1..=4 {
            let spec = GroupSpec::signed(n, 1).unwrap();
            let order = LinearOrder::symmetric(n, 1).unwrap();
            let mut seen = HashSet::new();
            for p in enumerate(spec).unwrap() {
                let image = gamma_symmetric(&p).unwrap();
                assert_eq!(ldes(&image, &order).unwrap(), bexc(&p).unwrap(), "at {p}");
                let first = p.letter(1);
                let expect = if first.value == 1 {
                    first
                } else {
                    Letter::new(first.value, -first.color)
                };
                assert_eq!(image.letter(1), expect, "class map broke at {p}");
                assert_eq!(gamma_symmetric_inverse(&image).unwrap(), p);
                assert!(seen.insert(image.to_string()));
            }
        }
    }

    #[test]
    fn gamma_symmetric_round_trips_with_more_colors() {
        for d in [2, 3] {
            let spec = GroupSpec::signed(3, d).unwrap();
            let order = LinearOrder::symmetric(3, d).unwrap();
            for p in enumerate(spec).unwrap() {
                let image = gamma_symmetric(&p).unwrap();
                assert_eq!(ldes(&image, &order).unwrap(), bexc(&p).unwrap());
                assert_eq!(gamma_symmetric_inverse(&image).unwrap(), p);
            }
        }
    }

    #[test]
    fn scheme_guards() {
        let p = plain(&[1, 2]);
        assert!(gamma_symmetric(&p).is_err());
        let q = signed_word(&[1, 2]);
        assert!(gamma_min_one(&q).is_err());
        let order = LinearOrder::min_one(2, 1).unwrap();
        assert!(phi(&q, &order).is_err());
        // mismatched alphabet
        let wrong = LinearOrder::min_one(3, 1).unwrap();
        assert!(phi(&p, &wrong).is_err());
    }
}
