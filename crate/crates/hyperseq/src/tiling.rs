//! Exhaustive enumeration of square/domino board and bracelet tilings
//! under a minimum-domino constraint, plus closed-form counting.
//!
//! Enumeration is streaming with O(m) working state and yields tilings in
//! lexicographic order, square before domino, leftmost position first.
//! Counting is binomial-based and has no cap; it is the cross-check for the
//! enumerators and for the hyperfibonacci/hyperlucas formulas.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::Error;
use crate::sequence::{binom, Nat};

/// Default board-length cap for enumeration. Counting is uncapped.
pub const DEFAULT_ENUM_CAP: u64 = 40;

/// A tile covers one cell (square) or two (domino).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tile {
    Square,
    Domino,
}

impl Tile {
    fn cells(self) -> u64 {
        match self {
            Tile::Square => 1,
            Tile::Domino => 2,
        }
    }
}

/// An ordered tiling of a 1 x m board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tiling {
    tiles: Vec<Tile>,
}

impl Tiling {
    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn board_length(&self) -> u64 {
        self.tiles.iter().map(|t| t.cells()).sum()
    }

    pub fn domino_count(&self) -> u64 {
        self.tiles.iter().filter(|t| **t == Tile::Domino).count() as u64
    }

    pub fn last_tile(&self) -> Option<Tile> {
        self.tiles.last().copied()
    }

    /// Text rendering over {"1","2"}: square -> 1, domino -> 2.
    pub fn render(&self) -> String {
        self.tiles
            .iter()
            .map(|t| match t {
                Tile::Square => '1',
                Tile::Domino => '2',
            })
            .collect()
    }
}

/// An m-bracelet: a board with cells 1 and m glued into a cycle.
///
/// An out-of-phase bracelet fixes one domino over the glue point (cells m
/// and 1) and stores only the linear remainder covering cells 2..m-1, so
/// its total length is body length + 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracelet {
    pub out_of_phase: bool,
    pub body: Tiling,
}

impl Bracelet {
    pub fn total_length(&self) -> u64 {
        self.body.board_length() + if self.out_of_phase { 2 } else { 0 }
    }

    pub fn domino_count(&self) -> u64 {
        self.body.domino_count() + if self.out_of_phase { 1 } else { 0 }
    }

    /// "P:" prefix for in-phase, "O:" for out-of-phase, then the body.
    pub fn render(&self) -> String {
        let prefix = if self.out_of_phase { "O:" } else { "P:" };
        format!("{}{}", prefix, self.body.render())
    }
}

fn check_cap(m: u64, cap: u64) -> Result<(), Error> {
    if m > cap {
        return Err(Error::Capacity {
            what: "board length",
            value: m,
            cap,
        });
    }
    Ok(())
}

/// Streaming enumerator over all tilings of an m-board with at least
/// `min_dominoes` dominoes, in lexicographic order (square < domino).
pub struct BoardTilings {
    m: u64,
    min_dominoes: u64,
    current: Vec<Tile>,
    covered: u64,
    dominoes: u64,
    started: bool,
    done: bool,
}

impl BoardTilings {
    fn new(m: u64, min_dominoes: u64) -> Self {
        BoardTilings {
            m,
            min_dominoes,
            current: Vec::new(),
            covered: 0,
            dominoes: 0,
            started: false,
            done: false,
        }
    }

    /// Extends the current prefix with the lexicographically smallest valid
    /// completion: squares first, then just enough dominoes at the end.
    /// Returns false if no completion can meet the domino minimum.
    fn fill_smallest(&mut self) -> bool {
        let remaining = self.m - self.covered;
        let needed = self.min_dominoes.saturating_sub(self.dominoes);
        if 2 * needed > remaining {
            return false;
        }
        let squares = remaining - 2 * needed;
        for _ in 0..squares {
            self.push(Tile::Square);
        }
        for _ in 0..needed {
            self.push(Tile::Domino);
        }
        true
    }

    fn push(&mut self, t: Tile) {
        self.covered += t.cells();
        if t == Tile::Domino {
            self.dominoes += 1;
        }
        self.current.push(t);
    }

    fn pop(&mut self) -> Option<Tile> {
        let t = self.current.pop()?;
        self.covered -= t.cells();
        if t == Tile::Domino {
            self.dominoes -= 1;
        }
        Some(t)
    }
}

impl Iterator for BoardTilings {
    type Item = Tiling;

    fn next(&mut self) -> Option<Tiling> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if !self.fill_smallest() {
                self.done = true;
                return None;
            }
            return Some(Tiling {
                tiles: self.current.clone(),
            });
        }
        // Backtrack: find the rightmost square that can become a domino and
        // still admit a completion, then take the smallest completion.
        loop {
            match self.pop() {
                None => {
                    self.done = true;
                    return None;
                }
                Some(Tile::Domino) => continue,
                Some(Tile::Square) => {
                    if self.covered + 2 <= self.m {
                        self.push(Tile::Domino);
                        if self.fill_smallest() {
                            return Some(Tiling {
                                tiles: self.current.clone(),
                            });
                        }
                        self.pop();
                    }
                }
            }
        }
    }
}

/// Enumerates m-board tilings with at least `min_dominoes` dominoes under
/// the default cap. m = 0 yields the empty tiling iff min_dominoes = 0.
pub fn enumerate_board(m: u64, min_dominoes: u64) -> Result<BoardTilings, Error> {
    enumerate_board_with_cap(m, min_dominoes, DEFAULT_ENUM_CAP)
}

pub fn enumerate_board_with_cap(
    m: u64,
    min_dominoes: u64,
    cap: u64,
) -> Result<BoardTilings, Error> {
    check_cap(m, cap)?;
    Ok(BoardTilings::new(m, min_dominoes))
}

/// Exact count of m-board tilings with at least `min_dominoes` dominoes:
/// sum over k >= min of C(m-k, k), the number of tilings with k dominoes.
pub fn count_board(m: u64, min_dominoes: u64) -> Nat {
    let mut total = Nat::zero();
    for k in min_dominoes..=m / 2 {
        total += binom(m - k, k as i64);
    }
    total
}

/// Streaming enumerator over bracelets: the in-phase block (one bracelet
/// per qualifying m-board tiling) followed by the out-of-phase block (one
/// per (m-2)-board tiling with at least min_dominoes - 1 dominoes).
pub struct BraceletTilings {
    in_phase: BoardTilings,
    out_of_phase: Option<BoardTilings>,
}

impl Iterator for BraceletTilings {
    type Item = Bracelet;

    fn next(&mut self) -> Option<Bracelet> {
        if let Some(body) = self.in_phase.next() {
            return Some(Bracelet {
                out_of_phase: false,
                body,
            });
        }
        let body = self.out_of_phase.as_mut()?.next()?;
        Some(Bracelet {
            out_of_phase: true,
            body,
        })
    }
}

/// Enumerates m-bracelet tilings with at least `min_dominoes` dominoes.
/// Nothing enumerable exists at m = 0; that is a domain error (the l_0 = 2
/// convention lives in `count_bracelet`).
pub fn enumerate_bracelet(m: u64, min_dominoes: u64) -> Result<BraceletTilings, Error> {
    enumerate_bracelet_with_cap(m, min_dominoes, DEFAULT_ENUM_CAP)
}

pub fn enumerate_bracelet_with_cap(
    m: u64,
    min_dominoes: u64,
    cap: u64,
) -> Result<BraceletTilings, Error> {
    if m == 0 {
        return Err(Error::domain(
            "no enumerable bracelet of length 0; see count_bracelet for the convention value",
        ));
    }
    check_cap(m, cap)?;
    let in_phase = BoardTilings::new(m, min_dominoes);
    let out_of_phase = if m >= 2 {
        Some(BoardTilings::new(m - 2, min_dominoes.saturating_sub(1)))
    } else {
        None
    };
    Ok(BraceletTilings {
        in_phase,
        out_of_phase,
    })
}

/// A bracelet count, flagged when it is the m = 0 bookkeeping convention
/// (two phantom bracelets, matching L_0 = 2) rather than an enumerable one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceletCount {
    pub value: Nat,
    pub convention: bool,
}

/// Exact count of m-bracelet tilings with at least `min_dominoes` dominoes:
/// in-phase bracelets are m-board tilings, out-of-phase ones fix the wrap
/// domino and reduce to (m-2)-board tilings with one domino fewer required.
pub fn count_bracelet(m: u64, min_dominoes: u64) -> BraceletCount {
    if m == 0 {
        return if min_dominoes == 0 {
            BraceletCount {
                value: Nat::from(2u32),
                convention: true,
            }
        } else {
            BraceletCount {
                value: Nat::zero(),
                convention: false,
            }
        };
    }
    let mut value = count_board(m, min_dominoes);
    if m >= 2 {
        value += count_board(m - 2, min_dominoes.saturating_sub(1));
    }
    BraceletCount {
        value,
        convention: false,
    }
}

/// Histogram of unconstrained m-board tilings by domino count.
/// Entry k equals C(m-k, k); the entries sum to F_{m+1}.
pub fn domino_histogram_board(m: u64) -> Result<BTreeMap<u64, Nat>, Error> {
    domino_histogram_board_with_cap(m, DEFAULT_ENUM_CAP)
}

pub fn domino_histogram_board_with_cap(m: u64, cap: u64) -> Result<BTreeMap<u64, Nat>, Error> {
    check_cap(m, cap)?;
    let mut hist: BTreeMap<u64, Nat> = BTreeMap::new();
    for t in BoardTilings::new(m, 0) {
        *hist.entry(t.domino_count()).or_insert_with(Nat::zero) += 1u32;
    }
    Ok(hist)
}

/// The last-tile partition of the m-board tilings with at least r dominoes:
/// ending with a square; ending with a domino with exactly r dominoes
/// (set A); ending with a domino with at least r+1 dominoes (set B).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LastTileClassification {
    pub square_ending: Nat,
    pub exactly_r_domino_ending: Nat,
    pub at_least_r_plus_1_domino_ending: Nat,
    pub total: Nat,
}

pub fn classify_board_by_last_tile(m: u64, r: u32) -> Result<LastTileClassification, Error> {
    classify_board_by_last_tile_with_cap(m, r, DEFAULT_ENUM_CAP)
}

pub fn classify_board_by_last_tile_with_cap(
    m: u64,
    r: u32,
    cap: u64,
) -> Result<LastTileClassification, Error> {
    let r = u64::from(r);
    if m < 2 {
        return Err(Error::domain(format!(
            "board classification needs m >= 2, got m = {m}"
        )));
    }
    if m < 2 * r + 1 {
        return Err(Error::domain(format!(
            "board classification needs m >= 2r + 1, got m = {m}, r = {r}"
        )));
    }
    check_cap(m, cap)?;
    let mut square = 0u64;
    let mut set_a = 0u64;
    let mut set_b = 0u64;
    for t in BoardTilings::new(m, r) {
        match t.last_tile() {
            Some(Tile::Square) => square += 1,
            Some(Tile::Domino) => {
                if t.domino_count() == r {
                    set_a += 1;
                } else {
                    set_b += 1;
                }
            }
            None => unreachable!("m >= 2 rules out the empty tiling"),
        }
    }
    Ok(LastTileClassification {
        square_ending: Nat::from(square),
        exactly_r_domino_ending: Nat::from(set_a),
        at_least_r_plus_1_domino_ending: Nat::from(set_b),
        total: Nat::from(square + set_a + set_b),
    })
}

/// The phase partition of the m-bracelet tilings with at least r dominoes:
/// in-phase; out-of-phase with exactly r dominoes; out-of-phase with at
/// least r+1. The full domino-count histogram of the out-of-phase block is
/// reported alongside so the split can be inspected directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhaseClassification {
    pub in_phase: Nat,
    pub out_of_phase_exactly_r: Nat,
    pub out_of_phase_at_least_r_plus_1: Nat,
    pub out_of_phase_histogram: BTreeMap<u64, Nat>,
    pub total: Nat,
}

pub fn classify_bracelet_by_phase(m: u64, r: u32) -> Result<PhaseClassification, Error> {
    classify_bracelet_by_phase_with_cap(m, r, DEFAULT_ENUM_CAP)
}

pub fn classify_bracelet_by_phase_with_cap(
    m: u64,
    r: u32,
    cap: u64,
) -> Result<PhaseClassification, Error> {
    let r = u64::from(r);
    if m < 2 {
        return Err(Error::domain(format!(
            "bracelet classification needs m >= 2, got m = {m}"
        )));
    }
    if m < 2 * r {
        return Err(Error::domain(format!(
            "bracelet classification needs m >= 2r, got m = {m}, r = {r}"
        )));
    }
    let mut in_phase = 0u64;
    let mut exactly_r = 0u64;
    let mut at_least = 0u64;
    let mut hist: BTreeMap<u64, Nat> = BTreeMap::new();
    for b in enumerate_bracelet_with_cap(m, r, cap)? {
        if b.out_of_phase {
            let d = b.domino_count();
            *hist.entry(d).or_insert_with(Nat::zero) += 1u32;
            if d == r {
                exactly_r += 1;
            } else {
                at_least += 1;
            }
        } else {
            in_phase += 1;
        }
    }
    Ok(PhaseClassification {
        in_phase: Nat::from(in_phase),
        out_of_phase_exactly_r: Nat::from(exactly_r),
        out_of_phase_at_least_r_plus_1: Nat::from(at_least),
        out_of_phase_histogram: hist,
        total: Nat::from(in_phase + exactly_r + at_least),
    })
}
