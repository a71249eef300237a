//! Constructors for the families of bilinear identities.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::identity::{Identity, Term};
use crate::partition::Partition;
use crate::strip::{
    add_strips, corner_push, peel_complete, peel_down, peel_up, remove_first, validate_specs,
    Axis, PushMode, StripSpec,
};

/// The main strip-addition identity
///
/// `s_λ s_{λ⁺↓} = s_{λ⁺} s_{λ↓} + Σ_p s_{λ⁺↓^(r_p)} s_{λ↑_(r_p − 1, t_p)}`
///
/// with one right-hand term per strip after the leading one.
pub fn main_identity(lambda: &Partition, specs: &[StripSpec]) -> Result<Identity> {
    let pieces = MainPieces::new(lambda, specs)?;
    let mut rhs = vec![Term::unit(pieces.plus.clone(), pieces.peeled.clone())];
    for (down, up) in pieces.partial.iter() {
        rhs.push(Term::unit(down.clone(), up.clone()));
    }
    Identity::new(vec![Term::unit(lambda.clone(), pieces.plus_peeled)], rhs)
}

/// The labels occurring in the main identity.
struct MainPieces {
    plus: Partition,
    plus_peeled: Partition,
    peeled: Partition,
    /// `(λ⁺↓^(r_p), λ↑_(r_p − 1, t_p))` for each strip.
    partial: Vec<(Partition, Partition)>,
}

impl MainPieces {
    fn new(lambda: &Partition, specs: &[StripSpec]) -> Result<Self> {
        validate_specs(lambda, specs).map_err(Error::InvalidStripSpec)?;
        let plus = add_strips(lambda, specs)?;
        let partial = specs
            .iter()
            .map(|s| Ok((peel_down(&plus, s.r)?, peel_up(lambda, s.r - 1, s.t)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(MainPieces {
            plus_peeled: peel_complete(&plus),
            peeled: peel_complete(lambda),
            plus,
            partial,
        })
    }
}

/// The main identity with the first row or column removed from some labels.
///
/// Removing the first row touches `λ`, `λ⁺` and every `λ⁺↓^(r_p)`.
/// Removing the first column touches `λ`, `λ⁺` and every `λ↑_(r_p − 1, t_p)`:
/// these are exactly the labels of height ℓ(λ), so the identity stays
/// homogeneous.
pub fn barred_identity(lambda: &Partition, specs: &[StripSpec], axis: Axis) -> Result<Identity> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let pieces = MainPieces::new(lambda, specs)?;
    let bar = |p: &Partition| remove_first(p, axis);
    let mut rhs = vec![Term::unit(bar(&pieces.plus)?, pieces.peeled.clone())];
    for (down, up) in &pieces.partial {
        let term = match axis {
            Axis::Row => Term::unit(bar(down)?, up.clone()),
            Axis::Column => Term::unit(down.clone(), bar(up)?),
        };
        rhs.push(term);
    }
    Identity::new(vec![Term::unit(bar(lambda)?, pieces.plus_peeled)], rhs)
}

/// `s_λ s_λ = Σ_α s_{λ⁺₋(α)} s_{λ⁻₊(α)}` over the inner corners α of λ,
/// listed from the bottom corner up. Within a term the factor with the
/// longer first row is written first.
pub fn square_identity(lambda: &Partition) -> Identity {
    let count = lambda.inner_corners().len();
    let rhs = (1..=count)
        .rev()
        .map(|i| {
            let plus = corner_push(lambda, i, PushMode::PlusMinus).expect("corner index in range");
            let minus = corner_push(lambda, i, PushMode::MinusPlus).expect("corner index in range");
            if minus.part(1) > plus.part(1) {
                Term::unit(minus, plus)
            } else {
                Term::unit(plus, minus)
            }
        })
        .collect();
    Identity::new(vec![Term::unit(lambda.clone(), lambda.clone())], rhs)
        .expect("corner pushes preserve total weight")
}

/// The strip data that turns `ν = (ξ_1 + 1, λ)` into the square identity:
/// one vertical strip (`t = 1`) per distinct part, ending in row
/// `y_{p−1} + 2` and spanning that part's rows.
pub fn nu_construction(lambda: &Partition) -> Result<(Partition, Vec<StripSpec>)> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let mut nu = vec![lambda.part(1) + 1];
    nu.extend_from_slice(lambda.parts());
    let ys = lambda.corner_heights();
    let specs = lambda
        .distinct_parts()
        .iter()
        .zip(&ys)
        .map(|(&(_, mult), &y)| StripSpec::new(y + 2, mult, 1))
        .collect();
    Ok((Partition::new(&nu)?, specs))
}

/// The square identity derived by row removal from the main identity on ν.
pub fn square_identity_via_nu(lambda: &Partition) -> Result<Identity> {
    let (nu, specs) = nu_construction(lambda)?;
    barred_identity(&nu, &specs, Axis::Row)
}

/// `s_(m^n)² = s_(m^{n−1}) s_(m^{n+1}) + s_((m−1)^n) s_((m+1)^n)` for
/// `m, n ≥ 1`.
pub fn rectangle_identity(width: u32, rows: usize) -> Result<Identity> {
    if width == 0 || rows == 0 {
        return Err(Error::InvalidRange("rectangle needs width and rows at least 1"));
    }
    let rect = |w: u32, r: usize| Partition::rectangle(w, r);
    Identity::new(
        vec![Term::unit(rect(width, rows), rect(width, rows))],
        vec![
            Term::unit(rect(width, rows - 1), rect(width, rows + 1)),
            Term::unit(rect(width - 1, rows), rect(width + 1, rows)),
        ],
    )
}

/// For `λ = (λ_1, …, λ_{n+1})` of height n + 1 ≥ 2:
///
/// `s_(λ_2..λ_{n+1}) s_(λ_1..λ_n)
///   = s_(λ_1+1..λ_n+1) s_(λ_2−1..λ_{n+1}−1) + s_(λ_2..λ_n) s_(λ_1..λ_{n+1})`
pub fn fulmek_kleber_identity(lambda: &Partition) -> Result<Identity> {
    let len = lambda.height();
    if len < 2 {
        return Err(Error::HeightTooSmall { height: len, min: 2 });
    }
    let parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    let label = |slice: &[i64], shift: i64| {
        let shifted: Vec<i64> = slice.iter().map(|&p| p + shift).collect();
        Partition::from_signed(&shifted)
    };
    let n = len - 1;
    Identity::new(
        vec![Term::unit(label(&parts[1..], 0)?, label(&parts[..n], 0)?)],
        vec![
            Term::unit(label(&parts[..n], 1)?, label(&parts[1..], -1)?),
            Term::unit(label(&parts[1..n], 0)?, lambda.clone()),
        ],
    )
}

/// The same identity obtained from the main identity on
/// `λ̂ = (λ_1 + 1, λ_2, …, λ_{n+1})` with one strip from row 2 to the bottom
/// ending in `λ_1 − λ_2 + 1` boxes, followed by first-row removal.
pub fn fulmek_kleber_via_main(lambda: &Partition) -> Result<Identity> {
    let len = lambda.height();
    if len < 2 {
        return Err(Error::HeightTooSmall { height: len, min: 2 });
    }
    let mut hat = lambda.parts().to_vec();
    hat[0] += 1;
    let spec = StripSpec::new(2, len - 1, lambda.part(1) - lambda.part(2) + 1);
    barred_identity(&Partition::new(&hat)?, &[spec], Axis::Row)
}

/// `[r|p] = (p^r)`.
fn bracket(rows: u32, width: u32) -> Partition {
    Partition::rectangle(width, rows as usize)
}

/// `[r|p]^k = ((p+1)^k, p^{r−k})`, k ≤ r.
fn bracket_upper(rows: u32, width: u32, k: u32) -> Partition {
    let mut parts = vec![width + 1; k as usize];
    parts.extend(core::iter::repeat_n(width, (rows - k) as usize));
    Partition::new(&parts).expect("bracket parts are ordered")
}

/// `[r|p]_k = (p^r, k)`, k ≤ p.
fn bracket_lower(rows: u32, width: u32, k: u32) -> Partition {
    let mut parts = vec![width; rows as usize];
    parts.push(k);
    Partition::new(&parts).expect("bracket parts are ordered")
}

/// Product of two rectangles `s_[a|b] s_[m|n]` for `1 ≤ a ≤ m`, `1 ≤ b ≤ n`,
/// expanded as two alternating sums, with `[r|p] = (p^r)`:
///
/// `Σ_{k=max(1,a+b−n)}^{a} (−1)^{a−k} s_{[m|n]_{a+b−k}} s_{[a−1|b−1]^{k−1}}
///  + Σ_{k=max(1,a+b−m)}^{b} (−1)^{b−k} s_{[m|n]^{a+b−k}} s_{[a−1|b−1]_{k−1}}`
pub fn gps_identity(a: u32, b: u32, m: u32, n: u32) -> Result<Identity> {
    if a == 0 || b == 0 || a > m || b > n {
        return Err(Error::InvalidRange("need 1 ≤ a ≤ m and 1 ≤ b ≤ n"));
    }
    let sign = |e: u32| if e.is_multiple_of(2) { 1 } else { -1 };
    let mut rhs = Vec::new();
    for k in (a + b).saturating_sub(n).max(1)..=a {
        rhs.push(Term::new(
            sign(a - k),
            bracket_lower(m, n, a + b - k),
            bracket_upper(a - 1, b - 1, k - 1),
        ));
    }
    for k in (a + b).saturating_sub(m).max(1)..=b {
        rhs.push(Term::new(
            sign(b - k),
            bracket_upper(m, n, a + b - k),
            bracket_lower(a - 1, b - 1, k - 1),
        ));
    }
    Identity::new(vec![Term::unit(bracket(a, b), bracket(m, n))], rhs)
}
