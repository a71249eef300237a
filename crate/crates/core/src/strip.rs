//! Young-diagram surgery: peelings, border-strip addition, corner shifts
//! and pushes, first row/column removal.
//!
//! Rows are 1-based throughout, matching the usual λ_1, λ_2, … labelling.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result, StripViolation};
use crate::partition::Partition;

/// One border strip to glue onto a host diagram: it ends in row `r`
/// (where `t` boxes are added) and spans rows `r..=r + m − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StripSpec {
    pub r: usize,
    pub m: usize,
    pub t: u32,
}

impl StripSpec {
    pub fn new(r: usize, m: usize, t: u32) -> Self {
        StripSpec { r, m, t }
    }

    /// The beginning row `r_m = r + m − 1`.
    pub fn start_row(&self) -> usize {
        self.r + self.m - 1
    }
}

impl fmt::Display for StripSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.r, self.m, self.t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    Row,
    Column,
}

/// Direction of a single inner-corner shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShiftDir {
    HorizontalPlus,
    HorizontalMinus,
    VerticalPlus,
    VerticalMinus,
}

impl ShiftDir {
    fn name(self) -> &'static str {
        match self {
            ShiftDir::HorizontalPlus => "h+",
            ShiftDir::HorizontalMinus => "h-",
            ShiftDir::VerticalPlus => "v+",
            ShiftDir::VerticalMinus => "v-",
        }
    }
}

/// Corner push mode: `PlusMinus` gives λ⁺₋(α), `MinusPlus` gives λ⁻₊(α).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PushMode {
    PlusMinus,
    MinusPlus,
}

/// λ↓: remove the complete border strip, i.e. the first row and column.
pub fn peel_complete(lambda: &Partition) -> Partition {
    let parts: Vec<u32> = lambda.parts().iter().skip(1).map(|&p| p - 1).collect();
    Partition::new(&parts).expect("peeling keeps parts ordered")
}

/// λ↓^(r): partial down-peeling from the right-most strip box of row `r`.
pub fn peel_down(lambda: &Partition, r: usize) -> Result<Partition> {
    let n = lambda.height();
    if r == 0 || r > n {
        return Err(Error::RowOutOfRange { row: r, height: n });
    }
    let parts = lambda.parts();
    let mut out: Vec<u32> = parts[..r - 1].to_vec();
    out.extend(parts[r..].iter().map(|&p| p - 1));
    Ok(Partition::new(&out).expect("down-peeling keeps parts ordered"))
}

/// λ↑_(r,s): partial up-peeling from strip box `(r, s)`.
///
/// The start box must have nothing directly below it, which requires
/// λ_r > λ_{r+1} and 1 ≤ s ≤ λ_r − λ_{r+1}.
pub fn peel_up(lambda: &Partition, r: usize, s: u32) -> Result<Partition> {
    let n = lambda.height();
    if r == 0 || r > n {
        return Err(Error::RowOutOfRange { row: r, height: n });
    }
    let (here, below) = (lambda.part(r), lambda.part(r + 1));
    if here <= below || s == 0 || s > here - below {
        return Err(Error::InvalidStartBox { row: r, offset: s });
    }
    let parts = lambda.parts();
    let mut out: Vec<u32> = parts[1..r].iter().map(|&p| p - 1).collect();
    out.push(below + s - 1);
    out.extend_from_slice(&parts[r..]);
    Ok(Partition::new(&out).expect("up-peeling keeps parts ordered"))
}

/// Checks a strip list against its host diagram, reporting the first
/// violated inequality.
///
/// The last strip may reach the bottom row, so its row count is bounded by
/// `ℓ(λ) − r_k + 1`; earlier strips must end above the next strip's end row.
pub fn validate_specs(lambda: &Partition, specs: &[StripSpec]) -> Result<(), StripViolation> {
    let n = lambda.height();
    if specs.is_empty() {
        return Err(StripViolation::NoStrips);
    }
    for (i, spec) in specs.iter().enumerate() {
        let index = i + 1;
        if spec.r < 2 {
            return Err(StripViolation::EndRowTooSmall { index, r: spec.r });
        }
        if let Some(next) = specs.get(i + 1) {
            if next.r <= spec.r {
                return Err(StripViolation::EndRowsNotIncreasing { index });
            }
        }
        if spec.r > n {
            return Err(StripViolation::EndRowBeyondHeight { index, r: spec.r, height: n });
        }
        let (above, here) = (lambda.part(spec.r - 1), lambda.part(spec.r));
        if here >= above {
            return Err(StripViolation::NoStepAbove { index, r: spec.r });
        }
        let max_t = above - here;
        if spec.t == 0 || spec.t > max_t {
            return Err(StripViolation::TailOutOfRange { index, t: spec.t, max: max_t });
        }
        let max_m = specs.get(i + 1).map_or(n + 1, |next| next.r) - spec.r;
        if spec.m == 0 || spec.m > max_m {
            return Err(StripViolation::RowsOutOfRange { index, m: spec.m, max: max_m });
        }
    }
    Ok(())
}

/// λ⁺: glue every strip in `specs` onto `lambda`.
pub fn add_strips(lambda: &Partition, specs: &[StripSpec]) -> Result<Partition> {
    validate_specs(lambda, specs).map_err(Error::InvalidStripSpec)?;
    let mut out = lambda.parts().to_vec();
    for spec in specs {
        out[spec.r - 1] = lambda.part(spec.r) + spec.t;
        for row in spec.r + 1..=spec.start_row() {
            out[row - 1] = lambda.part(row - 1) + 1;
        }
    }
    Partition::new(&out).map_err(|_| unreachable!("validated strips keep the diagram a partition"))
}

/// Number of boxes the strips add: Σ (μ_{r_i} − μ_{r_i + m_i − 1} + t_i).
pub fn strip_box_count(lambda: &Partition, specs: &[StripSpec]) -> u32 {
    specs
        .iter()
        .map(|s| lambda.part(s.r) - lambda.part(s.start_row()) + s.m as u32 - 1 + s.t)
        .sum()
}

fn corner_coords(lambda: &Partition) -> Vec<(u32, u32)> {
    lambda.inner_corners().iter().map(|c| (c.x, c.y)).collect()
}

/// Shift one inner corner by ±1 horizontally or vertically, merging rows
/// when a gap closes.
pub fn corner_shift(lambda: &Partition, index: usize, dir: ShiftDir) -> Result<Partition> {
    let mut corners = corner_coords(lambda);
    let count = corners.len();
    if index == 0 || index > count {
        return Err(Error::CornerOutOfRange { index, count });
    }
    let undefined = Error::ShiftUndefined { index, dir: dir.name() };
    let (x, y) = corners[index - 1];
    match dir {
        ShiftDir::HorizontalPlus | ShiftDir::HorizontalMinus if x == 0 => return Err(undefined),
        ShiftDir::HorizontalPlus if index == 1 => return Err(undefined),
        ShiftDir::VerticalPlus | ShiftDir::VerticalMinus if y == 0 => return Err(undefined),
        _ => {}
    }
    let c = &mut corners[index - 1];
    match dir {
        ShiftDir::HorizontalPlus => c.0 += 1,
        ShiftDir::HorizontalMinus => c.0 -= 1,
        ShiftDir::VerticalPlus => c.1 += 1,
        ShiftDir::VerticalMinus => c.1 -= 1,
    }
    Partition::from_corners(&corners)
}

/// λ⁺₋(α_i) or λ⁻₊(α_i): shift every corner above α_i horizontally and
/// every corner below it vertically, in opposite senses, keeping α_i fixed.
pub fn corner_push(lambda: &Partition, index: usize, mode: PushMode) -> Result<Partition> {
    let mut corners = corner_coords(lambda);
    let count = corners.len();
    if index == 0 || index > count {
        return Err(Error::CornerOutOfRange { index, count });
    }
    for (j, c) in corners.iter_mut().enumerate() {
        let j = j + 1;
        match (mode, j.cmp(&index)) {
            (PushMode::PlusMinus, core::cmp::Ordering::Less) => c.0 += 1,
            (PushMode::PlusMinus, core::cmp::Ordering::Greater) => c.1 -= 1,
            (PushMode::MinusPlus, core::cmp::Ordering::Less) => c.0 -= 1,
            (PushMode::MinusPlus, core::cmp::Ordering::Greater) => c.1 += 1,
            _ => {}
        }
    }
    Partition::from_corners(&corners)
}

/// Remove the first row or the first column of a non-empty diagram.
pub fn remove_first(lambda: &Partition, axis: Axis) -> Result<Partition> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let parts = lambda.parts();
    let out: Vec<u32> = match axis {
        Axis::Row => parts[1..].to_vec(),
        Axis::Column => parts.iter().map(|&p| p - 1).collect(),
    };
    Ok(Partition::new(&out).expect("removal keeps parts ordered"))
}

/// Every strip list with at most `max_k` strips that [`validate_specs`]
/// accepts, ordered by strip count and then lexicographically.
pub fn enumerate_specs(lambda: &Partition, max_k: usize) -> Vec<Vec<StripSpec>> {
    let n = lambda.height();
    let mut singles = Vec::new();
    for r in 2..=n {
        let (above, here) = (lambda.part(r - 1), lambda.part(r));
        if here >= above {
            continue;
        }
        for m in 1..=n - r + 1 {
            for t in 1..=above - here {
                singles.push(StripSpec::new(r, m, t));
            }
        }
    }

    fn extend(
        singles: &[StripSpec],
        from: usize,
        want: usize,
        acc: &mut Vec<StripSpec>,
        out: &mut Vec<Vec<StripSpec>>,
    ) {
        if acc.len() == want {
            out.push(acc.clone());
            return;
        }
        for (i, s) in singles.iter().enumerate().skip(from) {
            if acc.last().is_some_and(|prev| prev.start_row() >= s.r) {
                continue;
            }
            acc.push(*s);
            extend(singles, i + 1, want, acc, out);
            acc.pop();
        }
    }

    // the windows are disjoint and start below row 1
    let max_k = max_k.min(n.saturating_sub(1));
    let mut out = Vec::new();
    for k in 1..=max_k {
        extend(&singles, 0, k, &mut Vec::new(), &mut out);
    }
    out
}
