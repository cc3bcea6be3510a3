//! Colored permutations: the data model, exhaustive enumeration, and the
//! decorated cycle form.
//!
//! An element of the group is a word `(π₁)_{c₁} … (πₙ)_{cₙ}` where the
//! values `π₁…πₙ` are a permutation of `1..=n` and each color `cᵢ` lies in
//! the group's color set. Two color schemes are supported:
//!
//! * `Unsigned(d)` — colors `0..d`, the wreath-product alphabet `[n]×[d]₀`;
//! * `Signed(d)` — colors `±1..=±d` with a virtual zero letter prefixed to
//!   every word. `Signed(1)` is the hyperoctahedral group of signed
//!   permutations.
//!
//! The decorated cycle form attaches to each value the color it carries in
//! the word: the cycle entry for value `v` is `(v, c_{π⁻¹(v)})`, so reading
//! consecutive cycle entries yields exactly the pairs compared by the
//! excedance statistics.

use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the number of elements any exhaustive walk may visit.
pub const DEFAULT_ENUMERATION_CAP: u128 = 100_000_000;

/// Color scheme of a colored permutation group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColorScheme {
    /// Colors `0, 1, …, d-1`.
    Unsigned(u32),
    /// Colors `-d, …, -1, 1, …, d`; words carry a virtual leading zero.
    Signed(u32),
}

impl ColorScheme {
    /// Number of colors a single letter can take.
    pub fn color_count(&self) -> usize {
        match self {
            ColorScheme::Unsigned(d) => *d as usize,
            ColorScheme::Signed(d) => 2 * *d as usize,
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, ColorScheme::Signed(_))
    }

    /// The color parameter `d`.
    pub fn d(&self) -> u32 {
        match self {
            ColorScheme::Unsigned(d) | ColorScheme::Signed(d) => *d,
        }
    }

    pub fn contains_color(&self, c: i32) -> bool {
        match self {
            ColorScheme::Unsigned(d) => c >= 0 && (c as u32) < *d,
            ColorScheme::Signed(d) => c != 0 && c.unsigned_abs() <= *d,
        }
    }

    /// All colors in ascending numeric order.
    pub fn colors(&self) -> Vec<i32> {
        match self {
            ColorScheme::Unsigned(d) => (0..*d as i32).collect(),
            ColorScheme::Signed(d) => {
                let d = *d as i32;
                (-d..=-1).chain(1..=d).collect()
            }
        }
    }
}

impl fmt::Display for ColorScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColorScheme::Unsigned(d) => write!(f, "Unsigned({d})"),
            ColorScheme::Signed(d) => write!(f, "Signed({d})"),
        }
    }
}

/// A colored permutation group: word length `n` and a color scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    n: usize,
    scheme: ColorScheme,
}

impl GroupSpec {
    pub fn new(n: usize, scheme: ColorScheme) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("word length n must be at least 1".into()));
        }
        if scheme.d() == 0 {
            return Err(Error::OutOfRange("color parameter d must be at least 1".into()));
        }
        Ok(GroupSpec { n, scheme })
    }

    pub fn unsigned(n: usize, d: u32) -> Result<Self> {
        GroupSpec::new(n, ColorScheme::Unsigned(d))
    }

    pub fn signed(n: usize, d: u32) -> Result<Self> {
        GroupSpec::new(n, ColorScheme::Signed(d))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scheme(&self) -> ColorScheme {
        self.scheme
    }

    /// Number of group elements, `n! * |colors|^n`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let mut size: u128 = 1;
        for k in 1..=self.n as u128 {
            size = size.checked_mul(k)?;
        }
        let c = self.scheme.color_count() as u128;
        for _ in 0..self.n {
            size = size.checked_mul(c)?;
        }
        Some(size)
    }

    fn check_cap(&self, cap: u128) -> Result<u128> {
        match self.order() {
            Some(size) if size <= cap => Ok(size),
            Some(size) => Err(Error::GroupTooLarge { size, cap }),
            None => Err(Error::GroupTooLarge { size: u128::MAX, cap }),
        }
    }

    pub fn contains_letter(&self, letter: Letter) -> bool {
        if letter.is_zero() {
            return self.scheme.is_signed();
        }
        letter.value >= 1 && letter.value <= self.n && self.scheme.contains_color(letter.color)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.n, self.scheme)
    }
}

/// One alphabet letter: a value with a color. The zero letter `(0, 0)`
/// exists only in signed alphabets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub value: usize,
    pub color: i32,
}

impl Letter {
    pub fn new(value: usize, color: i32) -> Self {
        Letter { value, color }
    }

    /// The virtual leading letter of signed words.
    pub fn zero() -> Self {
        Letter { value: 0, color: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}_{}", self.value, self.color)
        }
    }
}

/// A validated colored permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredPerm {
    spec: GroupSpec,
    values: Vec<usize>,
    colors: Vec<i32>,
}

impl ColoredPerm {
    /// Validates and builds a colored permutation from its word.
    pub fn new(values: Vec<usize>, colors: Vec<i32>, spec: GroupSpec) -> Result<Self> {
        if values.len() != colors.len() {
            return Err(Error::LengthMismatch { values: values.len(), colors: colors.len() });
        }
        if values.len() != spec.n() {
            return Err(Error::LengthMismatch { values: values.len(), colors: spec.n() });
        }
        let n = spec.n();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v < 1 || v > n || seen[v] {
                return Err(Error::NotAPermutation { n });
            }
            seen[v] = true;
        }
        for &c in &colors {
            if !spec.scheme().contains_color(c) {
                return Err(Error::ColorOutOfRange { color: c, scheme: spec.scheme().to_string() });
            }
        }
        Ok(ColoredPerm { spec, values, colors })
    }

    /// Internal constructor for values already known to be valid.
    pub(crate) fn from_parts_unchecked(values: Vec<usize>, colors: Vec<i32>, spec: GroupSpec) -> Self {
        debug_assert!(ColoredPerm::new(values.clone(), colors.clone(), spec).is_ok());
        ColoredPerm { spec, values, colors }
    }

    /// The identity word: values ascending, every color the smallest one
    /// (0 for unsigned schemes, +1 for signed schemes).
    pub fn identity(spec: GroupSpec) -> Self {
        let base = if spec.scheme().is_signed() { 1 } else { 0 };
        ColoredPerm {
            spec,
            values: (1..=spec.n()).collect(),
            colors: vec![base; spec.n()],
        }
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn colors(&self) -> &[i32] {
        &self.colors
    }

    /// Letter at 1-based position `i`.
    pub fn letter(&self, i: usize) -> Letter {
        Letter::new(self.values[i - 1], self.colors[i - 1])
    }

    /// All word letters in position order.
    pub fn letters(&self) -> Vec<Letter> {
        self.values
            .iter()
            .zip(&self.colors)
            .map(|(&v, &c)| Letter::new(v, c))
            .collect()
    }

    /// Positions of each value: `inverse()[v-1]` is the 1-based position of
    /// value `v` in the word.
    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        inv
    }

    /// Reverses the word (values and colors together). Defined only for
    /// unsigned schemes; the zero-prefixed signed words are never reversed.
    pub fn reverse(&self) -> Result<ColoredPerm> {
        if self.spec.scheme().is_signed() {
            return Err(Error::RequiresUnsigned { op: "reverse" });
        }
        let mut values = self.values.clone();
        let mut colors = self.colors.clone();
        values.reverse();
        colors.reverse();
        Ok(ColoredPerm { spec: self.spec, values, colors })
    }

    /// Decorated cycle decomposition.
    ///
    /// Cycles follow the underlying permutation (`v` is followed by `π(v)`);
    /// the entry for value `v` carries the color `c_{π⁻¹(v)}` it has in the
    /// word. Each cycle starts at its smallest value and cycles are listed
    /// by smallest value ascending.
    pub fn cycle_decomposition(&self) -> CycleForm {
        let n = self.n();
        let inv = self.inverse();
        let color_of = |v: usize| self.colors[inv[v - 1] - 1];
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut v = start;
            loop {
                visited[v] = true;
                cycle.push(Letter::new(v, color_of(v)));
                v = self.values[v - 1];
                if v == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        CycleForm { spec: self.spec, cycles }
    }
}

impl fmt::Display for ColoredPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for letter in self.letters() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{letter}")?;
            first = false;
        }
        Ok(())
    }
}

/// Cycle decomposition of a colored permutation with word-color decorations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForm {
    spec: GroupSpec,
    cycles: Vec<Vec<Letter>>,
}

impl CycleForm {
    /// Validates cycle data: entries must partition `1..=n` and colors must
    /// lie in the color set.
    pub fn new(spec: GroupSpec, cycles: Vec<Vec<Letter>>) -> Result<Self> {
        let n = spec.n();
        let mut seen = vec![false; n + 1];
        let mut count = 0;
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(Error::InvalidCycles { n });
            }
            for letter in cycle {
                if letter.value < 1 || letter.value > n || seen[letter.value] {
                    return Err(Error::InvalidCycles { n });
                }
                if !spec.scheme().contains_color(letter.color) {
                    return Err(Error::ColorOutOfRange {
                        color: letter.color,
                        scheme: spec.scheme().to_string(),
                    });
                }
                seen[letter.value] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidCycles { n });
        }
        Ok(CycleForm { spec, cycles })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn cycles(&self) -> &[Vec<Letter>] {
        &self.cycles
    }

    /// Rebuilds the word: consecutive cycle entries define `π`, and the
    /// decoration of value `v` becomes the word color at `π⁻¹(v)`. Inverse
    /// of [`ColoredPerm::cycle_decomposition`].
    pub fn to_perm(&self) -> Result<ColoredPerm> {
        let n = self.spec.n();
        let mut values = vec![0usize; n];
        let mut decoration = vec![0i32; n + 1];
        for cycle in &self.cycles {
            for (k, letter) in cycle.iter().enumerate() {
                let next = cycle[(k + 1) % cycle.len()];
                values[letter.value - 1] = next.value;
                decoration[letter.value] = letter.color;
            }
        }
        let colors = values.iter().map(|&v| decoration[v]).collect();
        ColoredPerm::new(values, colors, self.spec)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (k, letter) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{letter}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Lexicographic successor of a value permutation, in place.
fn next_permutation(values: &mut [usize]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let mut i = values.len() - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = values.len() - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// Streams every element of a group (or of one first-letter class) exactly
/// once, in lexicographic order of `(values, colors)`.
#[derive(Debug)]
pub struct Elements {
    spec: GroupSpec,
    color_set: Vec<i32>,
    /// Fixed prefix: the first letter when iterating a restricted class.
    fixed: Option<Letter>,
    /// Current suffix value arrangement (everything after the fixed prefix).
    values: Vec<usize>,
    /// Color-set indices for the free positions, advanced as an odometer.
    color_idx: Vec<usize>,
    done: bool,
}

impl Elements {
    fn new(spec: GroupSpec, fixed: Option<Letter>) -> Self {
        let n = spec.n();
        let mut values: Vec<usize> = (1..=n).collect();
        if let Some(first) = fixed {
            values.retain(|&v| v != first.value);
        }
        let free = values.len();
        Elements {
            spec,
            color_set: spec.scheme().colors(),
            fixed,
            values,
            color_idx: vec![0; free],
            done: false,
        }
    }
}

impl Iterator for Elements {
    type Item = ColoredPerm;

    fn next(&mut self) -> Option<ColoredPerm> {
        if self.done {
            return None;
        }
        let mut values = Vec::with_capacity(self.spec.n());
        let mut colors = Vec::with_capacity(self.spec.n());
        if let Some(first) = self.fixed {
            values.push(first.value);
            colors.push(first.color);
        }
        values.extend(&self.values);
        colors.extend(self.color_idx.iter().map(|&k| self.color_set[k]));
        let element = ColoredPerm::from_parts_unchecked(values, colors, self.spec);

        // Advance: colors vary fastest, then the value arrangement.
        let mut pos = self.color_idx.len();
        loop {
            if pos == 0 {
                if !next_permutation(&mut self.values) {
                    self.done = true;
                }
                break;
            }
            pos -= 1;
            self.color_idx[pos] += 1;
            if self.color_idx[pos] < self.color_set.len() {
                break;
            }
            self.color_idx[pos] = 0;
        }
        Some(element)
    }
}

/// Enumerates the whole group under the default cap.
pub fn enumerate(spec: GroupSpec) -> Result<Elements> {
    enumerate_capped(spec, DEFAULT_ENUMERATION_CAP)
}

/// Enumerates the whole group, failing fast if it has more than `cap`
/// elements.
pub fn enumerate_capped(spec: GroupSpec, cap: u128) -> Result<Elements> {
    spec.check_cap(cap)?;
    Ok(Elements::new(spec, None))
}

/// Streams the class of elements whose first word letter is `first`,
/// under the default cap.
pub fn first_letter_class(spec: GroupSpec, first: Letter) -> Result<Elements> {
    first_letter_class_capped(spec, first, DEFAULT_ENUMERATION_CAP)
}

/// Streams a first-letter class with an explicit cap on the class size.
pub fn first_letter_class_capped(spec: GroupSpec, first: Letter, cap: u128) -> Result<Elements> {
    if first.is_zero() || !spec.contains_letter(first) {
        return Err(Error::LetterOutsideAlphabet { letter: first.to_string() });
    }
    let class_size = spec
        .check_cap(u128::MAX)
        .ok()
        .map(|size| size / (spec.n() as u128 * spec.scheme().color_count() as u128));
    match class_size {
        Some(size) if size <= cap => {}
        Some(size) => return Err(Error::GroupTooLarge { size, cap }),
        None => return Err(Error::GroupTooLarge { size: u128::MAX, cap }),
    }
    Ok(Elements::new(spec, Some(first)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unsigned(n: usize, d: u32) -> GroupSpec {
        GroupSpec::unsigned(n, d).unwrap()
    }

    fn signed(n: usize, d: u32) -> GroupSpec {
        GroupSpec::signed(n, d).unwrap()
    }

    /// The word used by most worked examples: (241563, 013302) with d = 4.
    pub(crate) fn running_example() -> ColoredPerm {
        ColoredPerm::new(vec![2, 4, 1, 5, 6, 3], vec![0, 1, 3, 3, 0, 2], unsigned(6, 4)).unwrap()
    }

    #[test]
    fn make_perm_validates() {
        assert!(running_example().values() == [2, 4, 1, 5, 6, 3]);
        // identity of S_1
        assert!(ColoredPerm::new(vec![1], vec![0], unsigned(1, 1)).is_ok());
        // signed colors round-trip
        let p = ColoredPerm::new(vec![1, 2], vec![1, -2], signed(2, 2)).unwrap();
        assert_eq!(p.colors(), [1, -2]);

        // rejections
        assert!(matches!(
            ColoredPerm::new(vec![1, 1], vec![0, 0], unsigned(2, 1)),
            Err(Error::NotAPermutation { n: 2 })
        ));
        assert!(matches!(
            ColoredPerm::new(vec![1, 2], vec![0, 4], unsigned(2, 4)),
            Err(Error::ColorOutOfRange { color: 4, .. })
        ));
        assert!(matches!(
            ColoredPerm::new(vec![1, 2], vec![0], unsigned(2, 1)),
            Err(Error::LengthMismatch { .. })
        ));
        // zero is not a signed color
        assert!(ColoredPerm::new(vec![1, 2], vec![0, 1], signed(2, 1)).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate(unsigned(2, 1)).unwrap().count(), 2);
        assert_eq!(enumerate(unsigned(2, 2)).unwrap().count(), 8);
        assert_eq!(enumerate(signed(2, 1)).unwrap().count(), 8);
        assert_eq!(enumerate(unsigned(4, 3)).unwrap().count(), 24 * 81);
    }

    #[test]
    fn enumeration_is_lexicographic_and_duplicate_free() {
        let words: Vec<_> = enumerate(unsigned(3, 2))
            .unwrap()
            .map(|p| (p.values().to_vec(), p.colors().to_vec()))
            .collect();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(words, sorted);
        assert_eq!(words.len(), 48);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let err = enumerate_capped(unsigned(5, 2), 100).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { size: 3840, cap: 100 }));
    }

    #[test]
    fn first_letter_classes_partition_the_group() {
        let spec = unsigned(3, 2);
        let mut total = 0;
        let mut sizes = Vec::new();
        for v in 1..=3 {
            for c in 0..2 {
                let class: Vec<_> = first_letter_class(spec, Letter::new(v, c)).unwrap().collect();
                assert!(class.iter().all(|p| p.letter(1) == Letter::new(v, c)));
                sizes.push(class.len());
                total += class.len();
            }
        }
        assert_eq!(total, 48);
        assert!(sizes.iter().all(|&s| s == sizes[0]));
    }

    #[test]
    fn first_letter_class_examples() {
        assert_eq!(first_letter_class(unsigned(2, 2), Letter::new(1, 0)).unwrap().count(), 2);
        assert_eq!(first_letter_class(unsigned(6, 1), Letter::new(1, 0)).unwrap().count(), 120);
        let class: Vec<_> = first_letter_class(signed(2, 1), Letter::new(2, 1)).unwrap().collect();
        let words: Vec<_> = class.iter().map(|p| (p.values().to_vec(), p.colors().to_vec())).collect();
        assert_eq!(
            words,
            vec![
                (vec![2, 1], vec![1, -1]),
                (vec![2, 1], vec![1, 1]),
            ]
        );
        assert!(first_letter_class(unsigned(2, 2), Letter::new(3, 0)).is_err());
    }

    #[test]
    fn cycle_decomposition_matches_worked_example() {
        let cf = running_example().cycle_decomposition();
        assert_eq!(cf.to_string(), "(1_3 2_0 4_1 5_3 6_0 3_2)");
    }

    #[test]
    fn fixed_points_keep_word_colors() {
        let p = ColoredPerm::new(vec![1, 2], vec![0, 1], unsigned(2, 2)).unwrap();
        assert_eq!(p.cycle_decomposition().to_string(), "(1_0)(2_1)");
    }

    #[test]
    fn transposition_decorations_use_word_colors() {
        // value 1 sits at position 2, so it carries c_2 = 1.
        let p = ColoredPerm::new(vec![2, 1], vec![0, 1], unsigned(2, 2)).unwrap();
        assert_eq!(p.cycle_decomposition().to_string(), "(1_1 2_0)");
    }

    #[test]
    fn cycle_form_round_trips() {
        let p = running_example();
        assert_eq!(p.cycle_decomposition().to_perm().unwrap(), p);

        // exhaustively over a small group
        for p in enumerate(unsigned(3, 2)).unwrap() {
            assert_eq!(p.cycle_decomposition().to_perm().unwrap(), p);
        }
        for p in enumerate(signed(3, 2)).unwrap() {
            assert_eq!(p.cycle_decomposition().to_perm().unwrap(), p);
        }
    }

    #[test]
    fn cycle_form_validates_partition() {
        let spec = unsigned(2, 1);
        let bad = CycleForm::new(spec, vec![vec![Letter::new(1, 0), Letter::new(1, 0)]]);
        assert!(matches!(bad, Err(Error::InvalidCycles { n: 2 })));
        let good = CycleForm::new(spec, vec![vec![Letter::new(1, 0)], vec![Letter::new(2, 0)]]).unwrap();
        assert_eq!(good.to_perm().unwrap(), ColoredPerm::identity(spec));
    }

    #[test]
    fn reverse_is_an_unsigned_involution() {
        let p = running_example();
        let r = p.reverse().unwrap();
        assert_eq!(r.to_string(), "3_2 6_0 5_3 1_3 4_1 2_0");
        assert_eq!(r.reverse().unwrap(), p);
        assert!(ColoredPerm::identity(signed(2, 1)).reverse().is_err());
    }

    #[test]
    fn multiset_of_letters_is_preserved() {
        for p in enumerate(unsigned(4, 2)).unwrap() {
            let mut word: Vec<_> = p.letters();
            let mut cyc: Vec<_> = p
                .cycle_decomposition()
                .cycles()
                .iter()
                .flatten()
                .copied()
                .collect();
            let mut rev: Vec<_> = p.reverse().unwrap().letters();
            let key = |l: &Letter| (l.value, l.color);
            word.sort_by_key(key);
            cyc.sort_by_key(key);
            rev.sort_by_key(key);
            assert_eq!(word, cyc);
            assert_eq!(word, rev);
        }
    }
}
