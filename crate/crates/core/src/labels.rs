//! The symmetric group on six symbols, the outer automorphism between
//! letter-permutations and number-permutations, and the typed label families
//! of the mysticum.
//!
//! Two six-element alphabets are in play: the *letters* `a..f` naming the six
//! conic points, and the *numbers* `0..5` naming everything else. The outer
//! automorphism `zeta` carries letter-permutations to number-permutations; it
//! is stored as the fifteen generator images below and extended
//! multiplicatively, and its inverse is materialized as a full 720-entry map.
//!
//! Composition convention, fixed once: `p.compose(&q)` applies `q` first and
//! then `p`, and a cycle `(x1 x2 .. xk)` decomposes as the product
//! `(x1 x2)(x2 x3)..(x_{k-1} x_k)` with the rightmost factor applied first.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Number of symbols in either alphabet.
pub const N: usize = 6;

/// Image of the letter transposition `(row, col)` under the outer
/// automorphism, as three disjoint number transpositions. Letters are encoded
/// `a=0 .. f=5`.
const ZETA_GENERATORS: [(u8, u8, [(u8, u8); 3]); 15] = [
    (0, 1, [(2, 1), (5, 3), (0, 4)]),
    (0, 2, [(2, 4), (5, 1), (0, 3)]),
    (0, 3, [(2, 0), (5, 4), (1, 3)]),
    (0, 4, [(2, 5), (0, 1), (3, 4)]),
    (0, 5, [(2, 3), (5, 0), (1, 4)]),
    (1, 2, [(2, 3), (5, 4), (0, 1)]),
    (1, 3, [(2, 5), (0, 3), (1, 4)]),
    (1, 4, [(2, 4), (5, 0), (1, 3)]),
    (1, 5, [(2, 0), (5, 1), (3, 4)]),
    (2, 3, [(2, 1), (5, 0), (3, 4)]),
    (2, 4, [(2, 0), (5, 3), (1, 4)]),
    (2, 5, [(2, 5), (0, 4), (1, 3)]),
    (3, 4, [(2, 3), (5, 1), (0, 4)]),
    (3, 5, [(2, 4), (5, 3), (0, 1)]),
    (4, 5, [(2, 1), (5, 4), (0, 3)]),
];

/// A permutation of six symbols, stored as its image array.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm6 {
    images: [u8; 6],
}

impl Perm6 {
    pub fn identity() -> Self {
        Perm6 {
            images: [0, 1, 2, 3, 4, 5],
        }
    }

    /// Builds a permutation from its image array; `None` unless it is a
    /// bijection of `{0..5}`.
    pub fn from_images(images: [u8; 6]) -> Option<Self> {
        let mut seen = [false; 6];
        for &v in &images {
            if v >= 6 || seen[v as usize] {
                return None;
            }
            seen[v as usize] = true;
        }
        Some(Perm6 { images })
    }

    /// Builds a permutation from disjoint cycles; symbols absent from every
    /// cycle are fixed.
    pub fn from_cycles(cycles: &[&[u8]]) -> Self {
        let mut images = [0, 1, 2, 3, 4, 5];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                images[x as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm6::from_images(images).expect("cycles must be disjoint and in range")
    }

    pub fn transposition(x: u8, y: u8) -> Self {
        Perm6::from_cycles(&[&[x, y]])
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    pub fn images(&self) -> &[u8; 6] {
        &self.images
    }

    /// `self.compose(&other)` applies `other` first, then `self`.
    pub fn compose(&self, other: &Perm6) -> Perm6 {
        let mut images = [0u8; 6];
        for x in 0..6 {
            images[x] = self.apply(other.apply(x as u8));
        }
        Perm6 { images }
    }

    pub fn inverse(&self) -> Perm6 {
        let mut images = [0u8; 6];
        for x in 0..6u8 {
            images[self.apply(x) as usize] = x;
        }
        Perm6 { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images == [0, 1, 2, 3, 4, 5]
    }

    /// Nontrivial cycles, each rotated to start at its smallest symbol and
    /// listed in order of that symbol.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 6];
        let mut out = Vec::new();
        for start in 0..6u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted lengths of the nontrivial cycles, e.g. `[2, 3]` for a `1+2+3`
    /// element and `[]` for the identity.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable();
        lens
    }

    /// A transposition word for this permutation, leftmost factor applied
    /// last, matching [`Perm6::compose`].
    pub fn transpositions(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for cycle in self.cycles() {
            for k in 0..cycle.len() - 1 {
                out.push((cycle[k], cycle[k + 1]));
            }
        }
        out
    }

    /// All 720 permutations, in lexicographic order of their image arrays.
    pub fn all() -> Vec<Perm6> {
        let mut out = Vec::with_capacity(720);
        let mut symbols: Vec<u8> = (0..6).collect();
        fn rec(prefix: &mut Vec<u8>, rest: &mut Vec<u8>, out: &mut Vec<Perm6>) {
            if rest.is_empty() {
                let mut images = [0u8; 6];
                images.copy_from_slice(prefix);
                out.push(Perm6 { images });
                return;
            }
            for k in 0..rest.len() {
                let x = rest.remove(k);
                prefix.push(x);
                rec(prefix, rest, out);
                prefix.pop();
                rest.insert(k, x);
            }
        }
        rec(&mut Vec::new(), &mut symbols, &mut out);
        out
    }
}

impl fmt::Debug for Perm6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        for cycle in self.cycles() {
            write!(f, "(")?;
            for x in cycle {
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A permutation of the letter alphabet `{a..f}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LetterPerm(pub Perm6);

/// A permutation of the number alphabet `{0..5}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NumberPerm(pub Perm6);

pub fn letter_char(x: u8) -> char {
    (b'a' + x) as char
}

pub fn letter_from_char(c: char) -> Result<u8> {
    match c {
        'a'..='f' => Ok(c as u8 - b'a'),
        _ => Err(Error::Parse {
            what: "letter",
            input: c.to_string(),
        }),
    }
}

fn digit_from_char(c: char) -> Result<u8> {
    match c {
        '0'..='5' => Ok(c as u8 - b'0'),
        _ => Err(Error::Parse {
            what: "symbol digit",
            input: c.to_string(),
        }),
    }
}

struct ZetaTables {
    forward: HashMap<Perm6, Perm6>,
    backward: HashMap<Perm6, Perm6>,
}

static ZETA: Lazy<ZetaTables> = Lazy::new(|| {
    let mut gen = HashMap::new();
    for &(x, y, imgs) in &ZETA_GENERATORS {
        let image = Perm6::from_cycles(&[
            &[imgs[0].0, imgs[0].1],
            &[imgs[1].0, imgs[1].1],
            &[imgs[2].0, imgs[2].1],
        ]);
        gen.insert(Perm6::transposition(x, y), image);
    }
    let mut forward = HashMap::with_capacity(720);
    let mut backward = HashMap::with_capacity(720);
    for p in Perm6::all() {
        let mut acc = Perm6::identity();
        for (x, y) in p.transpositions() {
            acc = acc.compose(&gen[&Perm6::transposition(x, y)]);
        }
        forward.insert(p, acc);
        backward.insert(acc, p);
    }
    assert_eq!(forward.len(), 720);
    assert_eq!(backward.len(), 720, "zeta must be a bijection");
    ZetaTables { forward, backward }
});

/// The outer automorphism, letter-permutations to number-permutations.
pub fn zeta(p: &LetterPerm) -> NumberPerm {
    NumberPerm(ZETA.forward[&p.0])
}

/// The inverse automorphism, number-permutations to letter-permutations.
pub fn zeta_inv(q: &NumberPerm) -> LetterPerm {
    LetterPerm(ZETA.backward[&q.0])
}

/// An unordered pair of distinct symbols, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair(u8, u8);

impl Pair {
    pub fn new(x: u8, y: u8) -> Self {
        assert!(
            x != y && x < 6 && y < 6,
            "pair symbols must be distinct and in range"
        );
        if x < y {
            Pair(x, y)
        } else {
            Pair(y, x)
        }
    }

    pub fn lo(&self) -> u8 {
        self.0
    }

    pub fn hi(&self) -> u8 {
        self.1
    }

    pub fn contains(&self, x: u8) -> bool {
        self.0 == x || self.1 == x
    }

    pub fn disjoint(&self, other: &Pair) -> bool {
        !other.contains(self.0) && !other.contains(self.1)
    }

    pub fn symbols(&self) -> [u8; 2] {
        [self.0, self.1]
    }
}

impl fmt::Debug for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// An unordered triple of distinct symbols, stored sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple(u8, u8, u8);

impl Triple {
    pub fn new(x: u8, y: u8, z: u8) -> Self {
        assert!(x != y && x != z && y != z && x < 6 && y < 6 && z < 6);
        let mut v = [x, y, z];
        v.sort_unstable();
        Triple(v[0], v[1], v[2])
    }

    pub fn contains(&self, x: u8) -> bool {
        self.0 == x || self.1 == x || self.2 == x
    }

    pub fn symbols(&self) -> [u8; 3] {
        [self.0, self.1, self.2]
    }

    /// The three symbols not in this triple.
    pub fn complement(&self) -> Triple {
        let rest = others(&self.symbols());
        Triple::new(rest[0], rest[1], rest[2])
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.0, self.1, self.2)
    }
}

/// Symbols of `{0..5}` not appearing in `used`, ascending.
pub fn others(used: &[u8]) -> Vec<u8> {
    (0..6u8).filter(|x| !used.contains(x)).collect()
}

/// The pair left over by two disjoint pairs.
pub fn complement_pair(a: &Pair, b: &Pair) -> Pair {
    let rest = others(&[a.0, a.1, b.0, b.1]);
    Pair::new(rest[0], rest[1])
}

/// Label of a Pascal line: `P x;yz` with `x` not in the unordered pair.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PascalLabel {
    pub x: u8,
    pub pair: Pair,
}

/// Label of a Kirkman node: `K x;yz`, same shape as a Pascal label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KirkmanLabel {
    pub x: u8,
    pub pair: Pair,
}

impl PascalLabel {
    pub fn new(x: u8, y: u8, z: u8) -> Self {
        let pair = Pair::new(y, z);
        assert!(!pair.contains(x));
        PascalLabel { x, pair }
    }
}

impl KirkmanLabel {
    pub fn new(x: u8, y: u8, z: u8) -> Self {
        let pair = Pair::new(y, z);
        assert!(!pair.contains(x));
        KirkmanLabel { x, pair }
    }
}

impl fmt::Debug for PascalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P {};{:?}", self.x, self.pair)
    }
}

impl fmt::Debug for KirkmanLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K {};{:?}", self.x, self.pair)
    }
}

/// An unordered pair of disjoint unordered pairs, e.g. the ordinary meeting
/// point `12.35 = 35.12`, a Ladd line or a Veronese node. 45 of these exist.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairPair {
    first: Pair,
    second: Pair,
}

impl PairPair {
    pub fn new(a: Pair, b: Pair) -> Self {
        assert!(a.disjoint(&b), "pair-pair halves must be disjoint");
        if a <= b {
            PairPair {
                first: a,
                second: b,
            }
        } else {
            PairPair {
                first: b,
                second: a,
            }
        }
    }

    pub fn first(&self) -> Pair {
        self.first
    }

    pub fn second(&self) -> Pair {
        self.second
    }

    /// The pair of symbols used by neither half.
    pub fn complement(&self) -> Pair {
        complement_pair(&self.first, &self.second)
    }
}

impl fmt::Debug for PairPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}.{:?}", self.first, self.second)
    }
}

/// An ordered pair of disjoint unordered pairs: the label shape of linking
/// lines, higher meeting points, Plücker–Ladd nodes, Salmon–Veronese lines
/// and the meeting/linking ranges. 90 of these exist; swapping the halves
/// names a different object.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedPairPair {
    pub upper: Pair,
    pub lower: Pair,
}

impl OrderedPairPair {
    pub fn new(upper: Pair, lower: Pair) -> Self {
        assert!(upper.disjoint(&lower), "pair-pair halves must be disjoint");
        OrderedPairPair { upper, lower }
    }

    pub fn swapped(&self) -> Self {
        OrderedPairPair {
            upper: self.lower,
            lower: self.upper,
        }
    }

    pub fn unordered(&self) -> PairPair {
        PairPair::new(self.upper, self.lower)
    }

    pub fn complement(&self) -> Pair {
        complement_pair(&self.upper, &self.lower)
    }
}

impl fmt::Debug for OrderedPairPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}'.{:?}", self.upper, self.lower)
    }
}

/// A hexagon on the six letters, read cyclically; reversal names the same
/// hexagon.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct HexagonWord([u8; 6]);

impl HexagonWord {
    pub fn new(letters: [u8; 6]) -> Result<Self> {
        let mut seen = [false; 6];
        for &x in &letters {
            if x >= 6 || seen[x as usize] {
                return Err(Error::RepeatedLetter);
            }
            seen[x as usize] = true;
        }
        Ok(HexagonWord(letters))
    }

    pub fn letters(&self) -> &[u8; 6] {
        &self.0
    }

    /// The 6-cycle sending each vertex to the next.
    pub fn as_cycle(&self) -> LetterPerm {
        LetterPerm(Perm6::from_cycles(&[&self.0]))
    }
}

impl FromStr for HexagonWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.trim().chars().collect();
        if chars.len() != 6 {
            return Err(Error::Parse {
                what: "hexagon word",
                input: s.to_string(),
            });
        }
        let mut letters = [0u8; 6];
        for (k, &c) in chars.iter().enumerate() {
            letters[k] = letter_from_char(c)?;
        }
        HexagonWord::new(letters)
    }
}

impl fmt::Debug for HexagonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            write!(f, "{}", letter_char(x))?;
        }
        Ok(())
    }
}

impl fmt::Display for HexagonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Applies the outer automorphism to the hexagon's 6-cycle and reads off the
/// fixed point and 2-cycle of the resulting `1+2+3` element. Invariant under
/// cyclic shifts and reversal of the word.
pub fn pascal_label_of_hexagon(hexagon: &HexagonWord) -> PascalLabel {
    let image = zeta(&hexagon.as_cycle());
    let cycles = image.0.cycles();
    debug_assert_eq!(
        image.0.cycle_type(),
        vec![2, 3],
        "zeta must swap 6 with 1+2+3"
    );
    let two = cycles
        .iter()
        .find(|c| c.len() == 2)
        .expect("2-cycle present");
    let fixed = (0..6u8)
        .find(|&x| image.0.apply(x) == x)
        .expect("fixed point present");
    PascalLabel::new(fixed, two[0], two[1])
}

/// Inverts [`pascal_label_of_hexagon`]: the hexagon is determined up to a
/// cyclic shift and reversal, and is returned with letter `a` first.
pub fn hexagon_of_pascal_label(label: &PascalLabel) -> HexagonWord {
    let rest = others(&[label.x, label.pair.lo(), label.pair.hi()]);
    let perm = Perm6::from_cycles(&[
        &[label.pair.lo(), label.pair.hi()],
        &[rest[0], rest[1], rest[2]],
    ]);
    let six_cycle = zeta_inv(&NumberPerm(perm));
    debug_assert_eq!(six_cycle.0.cycle_type(), vec![6]);
    let mut letters = [0u8; 6];
    for k in 1..6 {
        letters[k] = six_cycle.0.apply(letters[k - 1]);
    }
    HexagonWord::new(letters).expect("a 6-cycle visits every letter once")
}

/// The two letter chords whose intersection is the ordinary meeting point
/// `xy.zw`: the 2-cycles of `zeta^{-1}((xy)(zw))`.
pub fn meeting_chords(label: &PairPair) -> [(u8, u8); 2] {
    let perm = Perm6::from_cycles(&[
        &[label.first().lo(), label.first().hi()],
        &[label.second().lo(), label.second().hi()],
    ]);
    let letters = zeta_inv(&NumberPerm(perm));
    let cycles = letters.0.cycles();
    debug_assert_eq!(
        letters.0.cycle_type(),
        vec![2, 2],
        "zeta preserves the 2+2 class"
    );
    [(cycles[0][0], cycles[0][1]), (cycles[1][0], cycles[1][1])]
}

pub fn all_pairs() -> Vec<Pair> {
    let mut out = Vec::with_capacity(15);
    for x in 0..6u8 {
        for y in x + 1..6 {
            out.push(Pair::new(x, y));
        }
    }
    out
}

pub fn all_triples() -> Vec<Triple> {
    let mut out = Vec::with_capacity(20);
    for x in 0..6u8 {
        for y in x + 1..6 {
            for z in y + 1..6 {
                out.push(Triple::new(x, y, z));
            }
        }
    }
    out
}

pub fn all_pascal_labels() -> Vec<PascalLabel> {
    let mut out = Vec::with_capacity(60);
    for x in 0..6u8 {
        for pair in all_pairs() {
            if !pair.contains(x) {
                out.push(PascalLabel { x, pair });
            }
        }
    }
    out
}

pub fn all_kirkman_labels() -> Vec<KirkmanLabel> {
    all_pascal_labels()
        .into_iter()
        .map(|l| KirkmanLabel {
            x: l.x,
            pair: l.pair,
        })
        .collect()
}

pub fn all_pair_pairs() -> Vec<PairPair> {
    let mut out = Vec::with_capacity(45);
    for a in all_pairs() {
        for b in all_pairs() {
            if a < b && a.disjoint(&b) {
                out.push(PairPair::new(a, b));
            }
        }
    }
    out
}

pub fn all_ordered_pair_pairs() -> Vec<OrderedPairPair> {
    let mut out = Vec::with_capacity(90);
    for a in all_pairs() {
        for b in all_pairs() {
            if a != b && a.disjoint(&b) {
                out.push(OrderedPairPair::new(a, b));
            }
        }
    }
    out
}

/// The ten label families of the structure, used for enumeration and for the
/// textual addressing scheme. Linking lines and higher meeting points share
/// one textual shape; the parity of the lower height tells them apart.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LabelFamily {
    Pascal,
    Kirkman,
    Steiner,
    Cayley,
    Plucker,
    Salmon,
    OrdinaryMeeting,
    Ladd,
    VeroneseNode,
    /// Inter-layer elements between heights `lower` and `lower + 1`.
    InterLayer {
        lower: usize,
    },
}

/// Bit-exact label text for each family.
pub mod text {
    use super::*;

    pub fn pascal(l: &PascalLabel) -> String {
        format!("P {};{}{}", l.x, l.pair.lo(), l.pair.hi())
    }

    pub fn kirkman(l: &KirkmanLabel) -> String {
        format!("K {};{}{}", l.x, l.pair.lo(), l.pair.hi())
    }

    pub fn steiner(t: &Triple) -> String {
        let [x, y, z] = t.symbols();
        format!("N {x}{y}{z}")
    }

    pub fn cayley(t: &Triple) -> String {
        let [x, y, z] = t.symbols();
        format!("L {x}{y}{z}")
    }

    pub fn plucker(p: &Pair) -> String {
        format!("L {}{}", p.lo(), p.hi())
    }

    pub fn salmon(p: &Pair) -> String {
        format!("N {}{}", p.lo(), p.hi())
    }

    pub fn ordinary_meeting(l: &PairPair) -> String {
        format!(
            "{}{}.{}{}",
            l.first().lo(),
            l.first().hi(),
            l.second().lo(),
            l.second().hi()
        )
    }

    pub fn ladd(l: &PairPair) -> String {
        format!("L {}", ordinary_meeting(l))
    }

    pub fn veronese_node(l: &PairPair) -> String {
        format!("N {}", ordinary_meeting(l))
    }

    pub fn inter_layer(l: &OrderedPairPair, lower: usize) -> String {
        format!(
            "{}{}({}).{}{}({})",
            l.upper.lo(),
            l.upper.hi(),
            lower + 1,
            l.lower.lo(),
            l.lower.hi(),
            lower
        )
    }

    /// Ordered labels used by meeting/linking range specs and by the
    /// Plücker–Ladd nodes and Salmon–Veronese lines: `xy;zw`.
    pub fn ordered_pairs(l: &OrderedPairPair) -> String {
        format!(
            "{}{};{}{}",
            l.upper.lo(),
            l.upper.hi(),
            l.lower.lo(),
            l.lower.hi()
        )
    }
}

/// Complete duplicate-free enumeration of a family's label texts.
pub fn enumerate_labels(family: LabelFamily) -> Vec<String> {
    match family {
        LabelFamily::Pascal => all_pascal_labels().iter().map(text::pascal).collect(),
        LabelFamily::Kirkman => all_kirkman_labels().iter().map(text::kirkman).collect(),
        LabelFamily::Steiner => all_triples().iter().map(text::steiner).collect(),
        LabelFamily::Cayley => all_triples().iter().map(text::cayley).collect(),
        LabelFamily::Plucker => all_pairs().iter().map(text::plucker).collect(),
        LabelFamily::Salmon => all_pairs().iter().map(text::salmon).collect(),
        LabelFamily::OrdinaryMeeting => all_pair_pairs()
            .iter()
            .map(text::ordinary_meeting)
            .collect(),
        LabelFamily::Ladd => all_pair_pairs().iter().map(text::ladd).collect(),
        LabelFamily::VeroneseNode => all_pair_pairs().iter().map(text::veronese_node).collect(),
        LabelFamily::InterLayer { lower } => all_ordered_pair_pairs()
            .iter()
            .map(|l| text::inter_layer(l, lower))
            .collect(),
    }
}

fn parse_pair(s: &str) -> Result<Pair> {
    let chars: Vec<char> = s.chars().collect();
    let bad = || Error::Parse {
        what: "pair",
        input: s.to_string(),
    };
    if chars.len() != 2 {
        return Err(bad());
    }
    let x = digit_from_char(chars[0])?;
    let y = digit_from_char(chars[1])?;
    if x == y {
        return Err(bad());
    }
    Ok(Pair::new(x, y))
}

fn parse_pair_dot_pair(s: &str) -> Result<(Pair, Pair)> {
    let bad = || Error::Parse {
        what: "pair-pair",
        input: s.to_string(),
    };
    let (a, b) = s.split_once('.').ok_or_else(bad)?;
    let a = parse_pair(a)?;
    let b = parse_pair(b)?;
    if !a.disjoint(&b) {
        return Err(bad());
    }
    Ok((a, b))
}

/// A parsed label of any family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParsedLabel {
    Pascal(PascalLabel),
    Kirkman(KirkmanLabel),
    Steiner(Triple),
    Cayley(Triple),
    Plucker(Pair),
    Salmon(Pair),
    OrdinaryMeeting(PairPair),
    Ladd(PairPair),
    VeroneseNode(PairPair),
    InterLayer {
        label: OrderedPairPair,
        lower: usize,
    },
}

/// Parses the bit-exact label syntax of any family, e.g. `P 2;04`, `K 1;05`,
/// `N 024`, `L 135`, `L 24`, `N 24`, `12.35`, `L 12.34`, `N 12.34`,
/// `01(1).23(0)`.
pub fn parse_label(s: &str) -> Result<ParsedLabel> {
    let s = s.trim();
    let bad = || Error::Parse {
        what: "label",
        input: s.to_string(),
    };
    if let Some(rest) = s.strip_prefix("P ") {
        return parse_xyz(rest).map(|(x, p)| ParsedLabel::Pascal(PascalLabel { x, pair: p }));
    }
    if let Some(rest) = s.strip_prefix("K ") {
        return parse_xyz(rest).map(|(x, p)| ParsedLabel::Kirkman(KirkmanLabel { x, pair: p }));
    }
    for (prefix, is_line) in [("L ", true), ("N ", false)] {
        if let Some(rest) = s.strip_prefix(prefix) {
            if rest.contains('.') {
                let (a, b) = parse_pair_dot_pair(rest)?;
                let pp = PairPair::new(a, b);
                return Ok(if is_line {
                    ParsedLabel::Ladd(pp)
                } else {
                    ParsedLabel::VeroneseNode(pp)
                });
            }
            if rest.len() == 3 {
                let digits: Vec<u8> = rest.chars().map(digit_from_char).collect::<Result<_>>()?;
                let t = Triple::new(digits[0], digits[1], digits[2]);
                return Ok(if is_line {
                    ParsedLabel::Cayley(t)
                } else {
                    ParsedLabel::Steiner(t)
                });
            }
            if rest.len() == 2 {
                let p = parse_pair(rest)?;
                return Ok(if is_line {
                    ParsedLabel::Plucker(p)
                } else {
                    ParsedLabel::Salmon(p)
                });
            }
            return Err(bad());
        }
    }
    if s.contains('(') {
        // xy(i+1).zw(i)
        let (upper_part, lower_part) = s.split_once(").").ok_or_else(bad)?;
        let (upper_sym, upper_h) = upper_part.split_once('(').ok_or_else(bad)?;
        let lower_part = lower_part.strip_suffix(')').ok_or_else(bad)?;
        let (lower_sym, lower_h) = lower_part.split_once('(').ok_or_else(bad)?;
        let upper = parse_pair(upper_sym)?;
        let lower = parse_pair(lower_sym)?;
        if !upper.disjoint(&lower) {
            return Err(bad());
        }
        let hi: usize = upper_h.parse().map_err(|_| bad())?;
        let lo: usize = lower_h.parse().map_err(|_| bad())?;
        if hi != lo + 1 {
            return Err(bad());
        }
        return Ok(ParsedLabel::InterLayer {
            label: OrderedPairPair::new(upper, lower),
            lower: lo,
        });
    }
    if s.contains('.') {
        let (a, b) = parse_pair_dot_pair(s)?;
        return Ok(ParsedLabel::OrdinaryMeeting(PairPair::new(a, b)));
    }
    Err(bad())
}

fn parse_xyz(rest: &str) -> Result<(u8, Pair)> {
    let bad = || Error::Parse {
        what: "x;yz label",
        input: rest.to_string(),
    };
    let (x, yz) = rest.split_once(';').ok_or_else(bad)?;
    let x_chars: Vec<char> = x.chars().collect();
    if x_chars.len() != 1 {
        return Err(bad());
    }
    let x = digit_from_char(x_chars[0])?;
    let pair = parse_pair(yz)?;
    if pair.contains(x) {
        return Err(bad());
    }
    Ok((x, pair))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn letters(s: &str) -> LetterPerm {
        // cycle notation on one cycle, e.g. "acebfd"
        let xs: Vec<u8> = s.chars().map(|c| letter_from_char(c).unwrap()).collect();
        LetterPerm(Perm6::from_cycles(&[&xs]))
    }

    #[test]
    fn zeta_sends_ab_to_the_printed_triple() {
        let img = zeta(&LetterPerm(Perm6::transposition(0, 1)));
        assert_eq!(img.0, Perm6::from_cycles(&[&[2, 1], &[5, 3], &[0, 4]]));
    }

    #[test]
    fn zeta_on_the_worked_six_cycle() {
        // acebfd maps to the 1+2+3 element fixing 2, swapping 04, cycling 153.
        let img = zeta(&letters("acebfd"));
        assert_eq!(img.0, Perm6::from_cycles(&[&[0, 4], &[1, 5, 3]]));
        let img_inv = zeta(&LetterPerm(letters("acebfd").0.inverse()));
        assert_eq!(img_inv.0, Perm6::from_cycles(&[&[0, 4], &[1, 3, 5]]));
    }

    #[test]
    fn zeta_fixes_the_identity() {
        assert!(zeta(&LetterPerm(Perm6::identity())).0.is_identity());
    }

    #[test]
    fn zeta_inv_of_25_is_the_printed_involution() {
        let img = zeta_inv(&NumberPerm(Perm6::transposition(2, 5)));
        // (ae)(bd)(cf)
        assert_eq!(img.0, Perm6::from_cycles(&[&[0, 4], &[1, 3], &[2, 5]]));
    }

    #[test]
    fn zeta_inv_of_the_315_element_is_adfceb() {
        let q = Perm6::from_cycles(&[&[1, 5], &[0, 2, 4]]);
        let h = zeta_inv(&NumberPerm(q));
        let expected = letters("adfceb");
        assert!(h.0 == expected.0 || h.0 == expected.0.inverse());
    }

    #[test]
    fn zeta_round_trips() {
        for p in Perm6::all() {
            assert_eq!(zeta_inv(&zeta(&LetterPerm(p))).0, p);
        }
    }

    #[test]
    fn zeta_is_outer_on_transpositions() {
        for x in 0..6u8 {
            for y in x + 1..6 {
                let img = zeta(&LetterPerm(Perm6::transposition(x, y)));
                assert_eq!(img.0.cycle_type(), vec![2, 2, 2]);
            }
        }
    }

    #[test]
    fn zeta_cycle_type_census() {
        let mut census: BTreeMap<(Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        for p in Perm6::all() {
            let q = zeta(&LetterPerm(p));
            *census
                .entry((p.cycle_type(), q.0.cycle_type()))
                .or_default() += 1;
        }
        let expect = |a: &[usize], b: &[usize], n: usize| {
            assert_eq!(
                census.get(&(a.to_vec(), b.to_vec())),
                Some(&n),
                "{a:?} -> {b:?}"
            );
        };
        expect(&[], &[], 1);
        expect(&[2], &[2, 2, 2], 15);
        expect(&[2, 2, 2], &[2], 15);
        expect(&[3], &[3, 3], 40);
        expect(&[3, 3], &[3], 40);
        expect(&[6], &[2, 3], 120);
        expect(&[2, 3], &[6], 120);
        expect(&[2, 2], &[2, 2], 45);
        expect(&[4], &[4], 90);
        expect(&[5], &[5], 144);
        expect(&[2, 4], &[2, 4], 90);
        assert_eq!(census.values().sum::<usize>(), 720);
    }

    #[test]
    fn hexagon_label_examples() {
        let lbl = pascal_label_of_hexagon(&"acebfd".parse().unwrap());
        assert_eq!(lbl, PascalLabel::new(2, 0, 4));
        // Cyclic shift and reversal leave the label unchanged.
        let base = pascal_label_of_hexagon(&"abcdef".parse().unwrap());
        assert_eq!(pascal_label_of_hexagon(&"bcdefa".parse().unwrap()), base);
        assert_eq!(pascal_label_of_hexagon(&"fedcba".parse().unwrap()), base);
        // Frozen from composing the five generator images of
        // (ab)(bc)(cd)(de)(ef) in order: abcdef carries the label P 2;13.
        assert_eq!(base, PascalLabel::new(2, 1, 3));
    }

    #[test]
    fn hexagon_of_label_examples() {
        let hexagon = hexagon_of_pascal_label(&PascalLabel::new(3, 1, 5));
        let class = hexagon_class(&hexagon);
        assert!(
            class.contains(&"adfceb".parse::<HexagonWord>().unwrap()),
            "{hexagon:?}"
        );
        let hexagon = hexagon_of_pascal_label(&PascalLabel::new(2, 0, 4));
        assert!(hexagon_class(&hexagon).contains(&"acebfd".parse::<HexagonWord>().unwrap()));
        for lbl in all_pascal_labels() {
            assert_eq!(pascal_label_of_hexagon(&hexagon_of_pascal_label(&lbl)), lbl);
        }
    }

    /// All 12 words naming the same hexagon.
    fn hexagon_class(h: &HexagonWord) -> Vec<HexagonWord> {
        let mut out = Vec::new();
        let fwd = h.letters();
        for shift in 0..6 {
            let mut w = [0u8; 6];
            let mut r = [0u8; 6];
            for k in 0..6 {
                w[k] = fwd[(k + shift) % 6];
                r[k] = fwd[(6 + shift - k) % 6];
            }
            out.push(HexagonWord::new(w).unwrap());
            out.push(HexagonWord::new(r).unwrap());
        }
        out
    }

    #[test]
    fn hexagon_word_rejects_repeats() {
        assert_eq!(
            "aacdef".parse::<HexagonWord>().unwrap_err(),
            Error::RepeatedLetter
        );
        assert!(matches!(
            "abc".parse::<HexagonWord>(),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn meeting_chords_example() {
        // 23.04 is the intersection of chords ac and bf.
        let chords = meeting_chords(&PairPair::new(Pair::new(2, 3), Pair::new(0, 4)));
        let set: BTreeSet<(u8, u8)> = chords.iter().copied().collect();
        assert_eq!(set, BTreeSet::from([(0, 2), (1, 5)]));
    }

    #[test]
    fn enumeration_cardinalities() {
        assert_eq!(enumerate_labels(LabelFamily::Pascal).len(), 60);
        assert_eq!(enumerate_labels(LabelFamily::Kirkman).len(), 60);
        assert_eq!(enumerate_labels(LabelFamily::Steiner).len(), 20);
        assert_eq!(enumerate_labels(LabelFamily::Cayley).len(), 20);
        assert_eq!(enumerate_labels(LabelFamily::Plucker).len(), 15);
        assert_eq!(enumerate_labels(LabelFamily::Salmon).len(), 15);
        assert_eq!(enumerate_labels(LabelFamily::OrdinaryMeeting).len(), 45);
        assert_eq!(enumerate_labels(LabelFamily::Ladd).len(), 45);
        assert_eq!(enumerate_labels(LabelFamily::VeroneseNode).len(), 45);
        assert_eq!(
            enumerate_labels(LabelFamily::InterLayer { lower: 0 }).len(),
            90
        );
        for family in [LabelFamily::Pascal, LabelFamily::InterLayer { lower: 2 }] {
            let texts = enumerate_labels(family);
            let unique: BTreeSet<_> = texts.iter().collect();
            assert_eq!(unique.len(), texts.len());
        }
    }

    #[test]
    fn ordered_and_unordered_labels() {
        let a = OrderedPairPair::new(Pair::new(1, 2), Pair::new(3, 4));
        assert_ne!(a, a.swapped());
        assert_eq!(a.unordered(), a.swapped().unordered());
        assert_eq!(a.complement(), Pair::new(0, 5));
        let m = PairPair::new(Pair::new(3, 5), Pair::new(1, 2));
        assert_eq!(m, PairPair::new(Pair::new(1, 2), Pair::new(3, 5)));
        assert_eq!(text::ordinary_meeting(&m), "12.35");
    }

    #[test]
    fn label_text_samples() {
        assert_eq!(text::pascal(&PascalLabel::new(2, 4, 0)), "P 2;04");
        assert_eq!(text::kirkman(&KirkmanLabel::new(1, 0, 5)), "K 1;05");
        assert_eq!(text::steiner(&Triple::new(2, 0, 4)), "N 024");
        assert_eq!(text::cayley(&Triple::new(1, 3, 5)), "L 135");
        assert_eq!(text::plucker(&Pair::new(4, 2)), "L 24");
        assert_eq!(text::salmon(&Pair::new(2, 4)), "N 24");
        let ll = OrderedPairPair::new(Pair::new(0, 1), Pair::new(2, 3));
        assert_eq!(text::inter_layer(&ll, 0), "01(1).23(0)");
        assert_eq!(text::inter_layer(&ll.swapped(), 3), "23(4).01(3)");
    }

    #[test]
    fn label_parse_round_trips() {
        for family in [
            LabelFamily::Pascal,
            LabelFamily::Kirkman,
            LabelFamily::Steiner,
            LabelFamily::Cayley,
            LabelFamily::Plucker,
            LabelFamily::Salmon,
            LabelFamily::OrdinaryMeeting,
            LabelFamily::Ladd,
            LabelFamily::VeroneseNode,
            LabelFamily::InterLayer { lower: 1 },
        ] {
            for txt in enumerate_labels(family) {
                let parsed = parse_label(&txt).unwrap_or_else(|e| panic!("{txt}: {e}"));
                let back = match parsed {
                    ParsedLabel::Pascal(l) => text::pascal(&l),
                    ParsedLabel::Kirkman(l) => text::kirkman(&l),
                    ParsedLabel::Steiner(t) => text::steiner(&t),
                    ParsedLabel::Cayley(t) => text::cayley(&t),
                    ParsedLabel::Plucker(p) => text::plucker(&p),
                    ParsedLabel::Salmon(p) => text::salmon(&p),
                    ParsedLabel::OrdinaryMeeting(m) => text::ordinary_meeting(&m),
                    ParsedLabel::Ladd(m) => text::ladd(&m),
                    ParsedLabel::VeroneseNode(m) => text::veronese_node(&m),
                    ParsedLabel::InterLayer { label, lower } => text::inter_layer(&label, lower),
                };
                assert_eq!(back, txt);
            }
        }
        assert!(parse_label("P 2;24").is_err());
        assert!(parse_label("Q 2;04").is_err());
        assert!(parse_label("12.23").is_err());
        assert!(parse_label("01(2).23(0)").is_err());
    }

    fn arb_perm() -> impl Strategy<Value = Perm6> {
        (0usize..720).prop_map(|k| Perm6::all()[k])
    }

    proptest! {
        #[test]
        fn zeta_is_a_homomorphism(p in arb_perm(), q in arb_perm()) {
            let lhs = zeta(&LetterPerm(p.compose(&q)));
            let rhs = zeta(&LetterPerm(p)).0.compose(&zeta(&LetterPerm(q)).0);
            prop_assert_eq!(lhs.0, rhs);
        }

        #[test]
        fn compose_and_inverse(p in arb_perm(), q in arb_perm()) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert_eq!(p.compose(&q).inverse(), q.inverse().compose(&p.inverse()));
        }
    }
}
