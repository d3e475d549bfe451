//! Special matrix classes and the set-partition correspondence.
//!
//! Diagonal matrices encode integer compositions; binary, positive-diagonal,
//! and bidiagonal matrices are each characterized by a one-line condition on
//! the corresponding ascent sequence ([`binary_sequence_predicate`],
//! [`crate::sequences::AscentSequence::is_self_modified`],
//! [`bidiagonal_sequence_predicate`]).
//!
//! The deeper structure is the correspondence between `k x k` bidiagonal
//! matrices of weight `n` and *order-consecutive* set partitions of `[n]`
//! into `k` blocks: partitions whose blocks can be ordered so that every
//! prefix union is an interval. Such a partition is written as the numbers
//! `1..n` with one parenthesis pair per block ([`ParenRep`]); the matrix is
//! recovered by scanning that text across the diagonal and superdiagonal
//! ([`partition_to_matrix`]), and the text is recovered from the matrix by
//! the inverse walk ([`matrix_to_partition`]).

use crate::matrices::{FishburnMatrix, MatrixError};
use crate::sequences::AscentSequence;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// Errors from subclass conversions and partition handling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubclassError {
    /// Compositions must have at least one part.
    EmptyComposition,
    /// Composition part at `position` (1-based) is zero.
    ZeroPart { position: usize },
    /// The matrix has a positive entry off the diagonal.
    NotDiagonal,
    /// The matrix has a positive entry off the diagonal and superdiagonal.
    NotBidiagonal,
    /// The blocks admit no ordering with interval prefix unions.
    NotOrderConsecutive,
    /// The blocks do not partition `[n]`.
    InvalidPartition(String),
    /// The parenthesized text violates the representation rules.
    MalformedParens(String),
    /// The separator resolution did not have exactly one valid outcome.
    /// Never observed on valid bidiagonal matrices; kept as a guard.
    NoUniqueResolution { candidates: usize },
    /// Text input could not be parsed.
    Parse(String),
}

impl fmt::Display for SubclassError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubclassError::EmptyComposition => write!(f, "composition must be non-empty"),
            SubclassError::ZeroPart { position } => {
                write!(f, "composition part at position {position} is zero")
            }
            SubclassError::NotDiagonal => write!(f, "matrix is not diagonal"),
            SubclassError::NotBidiagonal => write!(f, "matrix is not bidiagonal"),
            SubclassError::NotOrderConsecutive => {
                write!(f, "partition is not order-consecutive")
            }
            SubclassError::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            SubclassError::MalformedParens(msg) => {
                write!(f, "malformed representation: {msg}")
            }
            SubclassError::NoUniqueResolution { candidates } => write!(
                f,
                "separator resolution produced {candidates} valid readings instead of 1"
            ),
            SubclassError::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for SubclassError {}

/// An ordered list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SubclassError> {
        if parts.is_empty() {
            return Err(SubclassError::EmptyComposition);
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(SubclassError::ZeroPart { position: i + 1 });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// The diagonal matrix whose diagonal reads off the parts. Its sequence
/// encoding is the weakly increasing staircase: part `i` copies of `i - 1`.
pub fn composition_to_diagonal(c: &Composition) -> FishburnMatrix {
    FishburnMatrix::diagonal(c.parts()).expect("composition parts are positive")
}

/// Reads the parts back off a diagonal matrix.
pub fn diagonal_to_composition(a: &FishburnMatrix) -> Result<Composition, SubclassError> {
    if !a.is_diagonal() {
        return Err(SubclassError::NotDiagonal);
    }
    let parts = (0..a.dim()).map(|i| a.rows()[i][i]).collect();
    Composition::new(parts)
}

/// True exactly when the matrix encoding of `x` is binary: no two adjacent
/// entries of `x` are equal.
pub fn binary_sequence_predicate(x: &AscentSequence) -> bool {
    x.equal_adjacent_pairs() == 0
}

/// Number of adjacent equal pairs in `x`; equals the total amount by which
/// the matrix entries of `x` exceed 1.
pub fn excess_pairs(x: &AscentSequence) -> usize {
    x.equal_adjacent_pairs()
}

/// True exactly when the matrix encoding of `x` is bidiagonal: every entry
/// is at least the ascent count of its prefix, less one.
pub fn bidiagonal_sequence_predicate(x: &AscentSequence) -> bool {
    let entries = x.entries();
    let mut ascents = 0;
    for i in 1..entries.len() {
        if entries[i - 1] < entries[i] {
            ascents += 1;
        }
        if entries[i] + 1 < ascents {
            return false;
        }
    }
    true
}

/// A partition of `[n]` into disjoint non-empty blocks, held in canonical
/// form: elements ascending within blocks, blocks ordered by least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, SubclassError> {
        if n == 0 {
            return Err(SubclassError::InvalidPartition(
                "ground set must be non-empty".into(),
            ));
        }
        let mut seen = vec![false; n + 1];
        let mut total = 0usize;
        for block in &blocks {
            if block.is_empty() {
                return Err(SubclassError::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v == 0 || v > n {
                    return Err(SubclassError::InvalidPartition(format!(
                        "element {v} outside 1..={n}"
                    )));
                }
                if seen[v] {
                    return Err(SubclassError::InvalidPartition(format!(
                        "element {v} appears twice"
                    )));
                }
                seen[v] = true;
                total += 1;
            }
        }
        if total != n {
            return Err(SubclassError::InvalidPartition(format!(
                "blocks cover {total} of {n} elements"
            )));
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        Ok(SetPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// True when some ordering of the blocks makes every prefix union an
    /// interval of `[n]`. Found by backtracking over block orderings; a set
    /// of used blocks determines the covered interval, so failed states are
    /// memoized by block mask.
    pub fn is_order_consecutive(&self) -> bool {
        let k = self.block_count();
        let spans: Vec<(usize, usize, usize)> = self
            .blocks
            .iter()
            .map(|b| (b[0], *b.last().expect("blocks are non-empty"), b.len()))
            .collect();
        let mut dead: HashSet<u64> = HashSet::new();

        fn extend(
            spans: &[(usize, usize, usize)],
            mask: u64,
            lo: usize,
            hi: usize,
            covered: usize,
            dead: &mut HashSet<u64>,
        ) -> bool {
            if covered > 0 && covered == hi - lo + 1 && mask.count_ones() as usize == spans.len() {
                return true;
            }
            if dead.contains(&mask) {
                return false;
            }
            for (i, &(bmin, bmax, blen)) in spans.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    continue;
                }
                let new_lo = if covered == 0 { bmin } else { lo.min(bmin) };
                let new_hi = if covered == 0 { bmax } else { hi.max(bmax) };
                let new_cov = covered + blen;
                if new_cov == new_hi - new_lo + 1
                    && extend(spans, mask | (1 << i), new_lo, new_hi, new_cov, dead)
                {
                    return true;
                }
            }
            dead.insert(mask);
            false
        }

        assert!(k <= 64, "partitions this large are out of scope");
        extend(&spans, 0, 0, 0, 0, &mut dead)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|v| v.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SetPartition {
    type Err = SubclassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        loop {
            rest = rest.trim_start();
            let Some(stripped) = rest.strip_prefix('{') else {
                return Err(SubclassError::Parse("expected '{'".into()));
            };
            let Some(end) = stripped.find('}') else {
                return Err(SubclassError::Parse("missing '}'".into()));
            };
            let inner = &stripped[..end];
            let block = inner
                .split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        SubclassError::Parse(format!("invalid element {:?}", p.trim()))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            blocks.push(block);
            rest = stripped[end + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            let Some(after) = rest.strip_prefix(',') else {
                return Err(SubclassError::Parse("expected ',' between blocks".into()));
            };
            rest = after;
        }
        let n = blocks.iter().flatten().copied().max().unwrap_or(0);
        SetPartition::new(n, blocks)
    }
}

/// A set partition validated to be order-consecutive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OCPartition {
    partition: SetPartition,
}

impl OCPartition {
    pub fn new(partition: SetPartition) -> Result<Self, SubclassError> {
        if !partition.is_order_consecutive() {
            return Err(SubclassError::NotOrderConsecutive);
        }
        Ok(OCPartition { partition })
    }

    pub fn partition(&self) -> &SetPartition {
        &self.partition
    }
}

impl std::ops::Deref for OCPartition {
    type Target = SetPartition;

    fn deref(&self) -> &SetPartition {
        &self.partition
    }
}

impl fmt::Display for OCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

impl FromStr for OCPartition {
    type Err = SubclassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OCPartition::new(s.parse()?)
    }
}

/// One symbol of a parenthesized partition representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParenToken {
    Open,
    Close,
    Number(usize),
}

/// The parenthesized form of an order-consecutive partition: the numbers
/// `1..n` in order with one parenthesis pair per block. The constraints:
///
/// - every number lies inside at least one pair, and each pair directly
///   contains at least one number;
/// - every pair opens and closes next to a directly contained number, so no
///   pair can be shrunk without changing the partition;
/// - deleting every adjacent `)(` pair leaves a fully nested parenthesis
///   string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParenRep {
    tokens: Vec<ParenToken>,
    n: usize,
    pairs: usize,
}

impl ParenRep {
    pub fn new(tokens: Vec<ParenToken>) -> Result<Self, SubclassError> {
        let numbers: Vec<usize> = tokens
            .iter()
            .filter_map(|t| match t {
                ParenToken::Number(v) => Some(*v),
                _ => None,
            })
            .collect();
        let n = numbers.len();
        if n == 0 {
            return Err(SubclassError::MalformedParens("no numbers".into()));
        }
        if numbers.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(SubclassError::MalformedParens(
                "numbers must read 1..n in order".into(),
            ));
        }
        if !balanced_and_covering(&tokens) {
            return Err(SubclassError::MalformedParens(
                "parentheses must balance and enclose every number".into(),
            ));
        }
        // Minimality: a pair starts and ends at its own numbers.
        for (i, t) in tokens.iter().enumerate() {
            match t {
                ParenToken::Open => {
                    if !matches!(tokens.get(i + 1), Some(ParenToken::Number(_))) {
                        return Err(SubclassError::MalformedParens(
                            "a pair must open directly before a number".into(),
                        ));
                    }
                }
                ParenToken::Close => {
                    if i == 0 || !matches!(tokens[i - 1], ParenToken::Number(_)) {
                        return Err(SubclassError::MalformedParens(
                            "a pair must close directly after a number".into(),
                        ));
                    }
                }
                ParenToken::Number(_) => {}
            }
        }
        if !nested_after_reduction(&tokens) {
            return Err(SubclassError::MalformedParens(
                "after removing adjacent ')(' pairs the rest must be fully nested".into(),
            ));
        }
        let pairs = tokens
            .iter()
            .filter(|t| matches!(t, ParenToken::Open))
            .count();
        Ok(ParenRep { tokens, n, pairs })
    }

    pub fn tokens(&self) -> &[ParenToken] {
        &self.tokens
    }

    /// Size of the ground set.
    pub fn ground_size(&self) -> usize {
        self.n
    }

    /// Number of parenthesis pairs, i.e. blocks.
    pub fn block_count(&self) -> usize {
        self.pairs
    }
}

/// Balance check plus coverage: depth never goes negative, ends at zero,
/// and every number sits at positive depth.
fn balanced_and_covering(tokens: &[ParenToken]) -> bool {
    let mut depth = 0i64;
    for t in tokens {
        match t {
            ParenToken::Open => depth += 1,
            ParenToken::Close => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            ParenToken::Number(_) => {
                if depth == 0 {
                    return false;
                }
            }
        }
    }
    depth == 0
}

/// Deletes adjacent `Close, Open` token pairs until none remain, then checks
/// that the surviving parentheses are fully nested (all opens first).
fn nested_after_reduction(tokens: &[ParenToken]) -> bool {
    let mut seq: Vec<ParenToken> = tokens.to_vec();
    loop {
        let adjacent = (0..seq.len().saturating_sub(1)).find(|&i| {
            matches!(seq[i], ParenToken::Close) && matches!(seq[i + 1], ParenToken::Open)
        });
        match adjacent {
            Some(i) => {
                seq.remove(i + 1);
                seq.remove(i);
            }
            None => break,
        }
    }
    let parens: Vec<bool> = seq
        .iter()
        .filter_map(|t| match t {
            ParenToken::Open => Some(true),
            ParenToken::Close => Some(false),
            ParenToken::Number(_) => None,
        })
        .collect();
    let first_close = parens
        .iter()
        .position(|&open| !open)
        .unwrap_or(parens.len());
    parens[first_close..].iter().all(|&open| !open)
}

impl fmt::Display for ParenRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spaced = self.n > 9;
        let mut prev_was_number = false;
        for t in &self.tokens {
            match t {
                ParenToken::Open => {
                    write!(f, "(")?;
                    prev_was_number = false;
                }
                ParenToken::Close => {
                    write!(f, ")")?;
                    prev_was_number = false;
                }
                ParenToken::Number(v) => {
                    if spaced && prev_was_number {
                        write!(f, " ")?;
                    }
                    write!(f, "{v}")?;
                    prev_was_number = true;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for ParenRep {
    type Err = SubclassError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        // Lex into parens and digit runs.
        enum Lexeme {
            Open,
            Close,
            Digits(String),
        }
        let mut lexemes: Vec<Lexeme> = Vec::new();
        for ch in s.trim().chars() {
            match ch {
                '(' => lexemes.push(Lexeme::Open),
                ')' => lexemes.push(Lexeme::Close),
                c if c.is_ascii_digit() => match lexemes.last_mut() {
                    Some(Lexeme::Digits(d)) => d.push(c),
                    _ => lexemes.push(Lexeme::Digits(c.to_string())),
                },
                c if c.is_whitespace() => {
                    // End the current digit run; runs split by spaces stay
                    // separate numbers.
                    if matches!(lexemes.last(), Some(Lexeme::Digits(_))) {
                        lexemes.push(Lexeme::Digits(String::new()));
                    }
                }
                c => return Err(SubclassError::Parse(format!("unexpected character {c:?}"))),
            }
        }
        let lexemes: Vec<Lexeme> = lexemes
            .into_iter()
            .filter(|l| !matches!(l, Lexeme::Digits(d) if d.is_empty()))
            .collect();

        // Two readings: digit runs as whole numbers, or split into single
        // digits (the compact form for ground sets up to 9). Whichever
        // yields the numbers 1..n in order wins; they agree when every run
        // is a single digit.
        let build = |split: bool| -> Result<Vec<ParenToken>, SubclassError> {
            let mut tokens = Vec::new();
            for l in &lexemes {
                match l {
                    Lexeme::Open => tokens.push(ParenToken::Open),
                    Lexeme::Close => tokens.push(ParenToken::Close),
                    Lexeme::Digits(d) => {
                        if split {
                            for c in d.chars() {
                                tokens.push(ParenToken::Number(
                                    c.to_digit(10).expect("digit") as usize
                                ));
                            }
                        } else {
                            tokens.push(ParenToken::Number(d.parse::<usize>().map_err(|_| {
                                SubclassError::Parse(format!("invalid number {d:?}"))
                            })?));
                        }
                    }
                }
            }
            Ok(tokens)
        };
        let consecutive = |tokens: &[ParenToken]| {
            tokens
                .iter()
                .filter_map(|t| match t {
                    ParenToken::Number(v) => Some(*v),
                    _ => None,
                })
                .enumerate()
                .all(|(i, v)| v == i + 1)
        };

        let whole = build(false)?;
        if consecutive(&whole) {
            return ParenRep::new(whole);
        }
        let split = build(true)?;
        if consecutive(&split) {
            return ParenRep::new(split);
        }
        Err(SubclassError::Parse(
            "numbers do not read 1..n under either spacing convention".into(),
        ))
    }
}

/// Extracts the partition: each pair's block is the set of numbers directly
/// inside it.
pub fn paren_to_blocks(rep: &ParenRep) -> OCPartition {
    let mut stack: Vec<Vec<usize>> = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for t in rep.tokens() {
        match t {
            ParenToken::Open => stack.push(Vec::new()),
            ParenToken::Number(v) => stack
                .last_mut()
                .expect("validated: every number is enclosed")
                .push(*v),
            ParenToken::Close => blocks.push(stack.pop().expect("validated: balanced")),
        }
    }
    let partition = SetPartition::new(rep.ground_size(), blocks)
        .expect("validated representation partitions the ground set");
    OCPartition::new(partition)
        .expect("a valid representation encodes an order-consecutive partition")
}

/// Filter used while resolving leftover separators: the candidate must
/// balance, cover every number, and satisfy the nesting constraint.
fn resolution_valid(tokens: &[ParenToken]) -> bool {
    balanced_and_covering(tokens) && nested_after_reduction(tokens)
}

/// Writes a bidiagonal matrix as a parenthesized partition representation.
///
/// Walks the entries in the order `(1,1), (1,2), (2,2), (2,3), ...`; an
/// entry `m` contributes the next `m` numbers followed by a separator. The
/// final separator is the closing parenthesis, adjacent separator pairs
/// become `)(`, and each leftover separator is resolved to `(` or `)` by
/// exhausting both choices and keeping the single one that satisfies the
/// representation constraints. Exactly one choice survives on every valid
/// input; [`SubclassError::NoUniqueResolution`] guards that claim.
pub fn matrix_to_partition(b: &FishburnMatrix) -> Result<ParenRep, SubclassError> {
    if !b.is_bidiagonal() {
        return Err(SubclassError::NotBidiagonal);
    }
    let k = b.dim();
    let grid = b.rows();

    #[derive(Debug, Clone, Copy, PartialEq, Eq)]
    enum Raw {
        Open,
        Close,
        Bar,
        Number(usize),
    }

    let mut cells: Vec<(usize, usize)> = Vec::with_capacity(2 * k - 1);
    for i in 0..k {
        cells.push((i, i));
        if i + 1 < k {
            cells.push((i, i + 1));
        }
    }

    let mut raw = vec![Raw::Open];
    let mut next_number = 1usize;
    for (i, j) in cells {
        for _ in 0..grid[i][j] {
            raw.push(Raw::Number(next_number));
            next_number += 1;
        }
        raw.push(Raw::Bar);
    }
    let last = raw.len() - 1;
    debug_assert_eq!(raw[last], Raw::Bar);
    raw[last] = Raw::Close;

    // A zero cell between two zero cells would need an all-zero row or
    // column, so at most two separators ever stand together.
    for w in raw.windows(3) {
        assert!(
            !(w[0] == Raw::Bar && w[1] == Raw::Bar && w[2] == Raw::Bar),
            "three adjacent separators on a valid bidiagonal matrix"
        );
    }
    let mut i = 0;
    while i + 1 < raw.len() {
        if raw[i] == Raw::Bar && raw[i + 1] == Raw::Bar {
            raw[i] = Raw::Close;
            raw[i + 1] = Raw::Open;
            i += 2;
        } else {
            i += 1;
        }
    }

    let bars: Vec<usize> = raw
        .iter()
        .enumerate()
        .filter_map(|(i, t)| (*t == Raw::Bar).then_some(i))
        .collect();
    assert!(bars.len() < 32, "matrices this large are out of scope");

    let mut survivor: Option<Vec<ParenToken>> = None;
    let mut candidates = 0usize;
    for mask in 0..(1u32 << bars.len()) {
        let tokens: Vec<ParenToken> = raw
            .iter()
            .enumerate()
            .map(|(i, t)| match t {
                Raw::Open => ParenToken::Open,
                Raw::Close => ParenToken::Close,
                Raw::Number(v) => ParenToken::Number(*v),
                Raw::Bar => {
                    let which = bars.iter().position(|&b| b == i).expect("bar indexed");
                    if mask & (1 << which) != 0 {
                        ParenToken::Open
                    } else {
                        ParenToken::Close
                    }
                }
            })
            .collect();
        if resolution_valid(&tokens) {
            candidates += 1;
            survivor = Some(tokens);
        }
    }
    if candidates != 1 {
        return Err(SubclassError::NoUniqueResolution { candidates });
    }
    ParenRep::new(survivor.expect("candidate recorded"))
        .map_err(|e| SubclassError::MalformedParens(format!("unique resolution rejected: {e}")))
}

/// Builds the bidiagonal matrix of an order-consecutive partition.
///
/// The representation is assembled first: each block opens before its least
/// element and closes after its greatest, and when a close and an open land
/// between the same two numbers the close comes first (the opposite order
/// would start a pair at another pair, which the minimality rule forbids).
/// The matrix is then read off by scanning the representation along the
/// diagonal and superdiagonal: a number bumps the current entry, and every
/// parenthesis advances from `(i,i)` to `(i,i+1)` or from `(i,i+1)` to
/// `(i+1,i+1)`.
pub fn partition_to_matrix(p: &OCPartition) -> FishburnMatrix {
    let rep = partition_to_paren(p);
    scan_to_matrix(&rep)
}

/// The parenthesized representation of an order-consecutive partition.
pub fn partition_to_paren(p: &OCPartition) -> ParenRep {
    let n = p.n();
    let mut open_at = vec![false; n + 1];
    let mut close_at = vec![false; n + 1];
    for block in p.blocks() {
        open_at[block[0] - 1] = true;
        close_at[*block.last().expect("blocks are non-empty")] = true;
    }
    let mut tokens: Vec<ParenToken> = Vec::with_capacity(n + 2 * p.block_count());
    for g in 0..=n {
        if g > 0 && close_at[g] {
            tokens.push(ParenToken::Close);
        }
        if g < n && open_at[g] {
            tokens.push(ParenToken::Open);
        }
        if g < n {
            tokens.push(ParenToken::Number(g + 1));
        }
    }
    let rep =
        ParenRep::new(tokens).expect("an order-consecutive partition has a valid representation");
    debug_assert_eq!(paren_to_blocks(&rep).partition(), p.partition());
    rep
}

fn scan_to_matrix(rep: &ParenRep) -> FishburnMatrix {
    let k = rep.block_count();
    let mut grid = vec![vec![0usize; k]; k];
    let (mut r, mut c) = (0usize, 0usize);
    for t in &rep.tokens()[1..] {
        match t {
            ParenToken::Number(_) => grid[r][c] += 1,
            _ => {
                if r == c {
                    c += 1;
                } else {
                    r += 1;
                }
            }
        }
    }
    FishburnMatrix::from_grid(grid)
}

/// Per-term values of the bidiagonal counting formula: term `j` counts the
/// `k x k` bidiagonal matrices of weight `n` with exactly `j` zeros among
/// the diagonal and superdiagonal entries.
pub fn count_bidiagonal_terms(n: usize, k: usize) -> Vec<u64> {
    assert!(n >= 1 && k >= 1);
    (0..k)
        .map(|j| {
            let slots = (2 * k - j - 2) as u64;
            binomial((n - 1) as u64, slots) * binomial(slots, j as u64)
        })
        .collect()
}

/// Number of `k x k` bidiagonal matrices of weight `n`, by the closed
/// binomial formula.
pub fn count_bidiagonal(n: usize, k: usize) -> u64 {
    count_bidiagonal_terms(n, k).iter().sum()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result = 1u64;
    for i in 0..k {
        result = result * (n - i) / (i + 1);
    }
    result
}

/// Every partition of `[n]`, generated from restricted growth strings in
/// lexicographic order.
pub fn all_set_partitions(n: usize) -> Vec<SetPartition> {
    assert!(n >= 1, "ground set must be non-empty");
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn extend(rgs: &mut Vec<usize>, pos: usize, max_used: usize, out: &mut Vec<SetPartition>) {
        let n = rgs.len();
        if pos == n {
            let block_count = max_used + 1;
            let mut blocks = vec![Vec::new(); block_count];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(i + 1);
            }
            out.push(SetPartition::new(n, blocks).expect("growth string yields a partition"));
            return;
        }
        for v in 0..=max_used + 1 {
            rgs[pos] = v;
            extend(rgs, pos + 1, max_used.max(v), out);
        }
    }
    if n == 1 {
        out.push(SetPartition::new(1, vec![vec![1]]).expect("singleton"));
        return out;
    }
    extend(&mut rgs, 1, 0, &mut out);
    out
}

/// Convenience: the matrix error type for conversions that start from raw
/// grids in caller code.
pub type MatrixResult = Result<FishburnMatrix, MatrixError>;
