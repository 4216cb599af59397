//! Exhaustive search over `(b, c)` for both families, and certification
//! of the tree, the parametrizations and the bijection against it.
//!
//! The search shares only the membership predicates with the rest of the
//! crate; it never calls the generators or the `(m, n)` maps.

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{gcd3, mul, SqrtTracker};
use crate::bijection::{from_sub, to_sub};
use crate::error::{Error, Result};
use crate::params::{eisenstein_from_params, sub_eisenstein_from_params, valid_pairs, Variant};
use crate::tree::TreeEnumerator;
use crate::triple::{gcd3 as triple_gcd3, is_primitive, Family, Triple};

/// All primitive `family` triples with `b ≥ c` and `a ≤ max_a`, sorted by
/// `(a, b, c)`.
///
/// For 60° the sweep stops at `3b² > 4·max_a²` since `a² ≥ 3b²/4` when
/// `c ≤ b`; for 120° at `b ≥ max_a` since `a > b`.
pub fn brute_force(family: Family, max_a: i64) -> Result<Vec<Triple>> {
    if max_a < 1 {
        return Err(Error::InvalidBound(max_a));
    }
    // largest q examined is below 4·max_a²
    let a_sq = mul(max_a, max_a)?;
    mul(a_sq, 4)?;
    let a_sq = a_sq as u64;
    let max_b = match family {
        Family::Sixty => {
            let mut b = 0u64;
            while 3 * (b + 1) * (b + 1) <= 4 * a_sq {
                b += 1;
            }
            b
        }
        Family::OneTwenty => max_a as u64 - 1,
    };
    let mut found: Vec<Triple> = (1..=max_b)
        .into_par_iter()
        .flat_map_iter(|b| sweep_row(family, b, a_sq))
        .collect();
    found.sort_unstable();
    Ok(found)
}

fn sweep_row(family: Family, b: u64, a_sq: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    let mut root = SqrtTracker::new(b * b);
    for c in 1..=b {
        let q = match family {
            Family::Sixty => b * b - b * c + c * c,
            Family::OneTwenty => b * b + b * c + c * c,
        };
        if q > a_sq {
            match family {
                // increasing in c
                Family::OneTwenty => break,
                Family::Sixty => continue,
            }
        }
        let r = root.update(q);
        if r * r == q && gcd3(r as i64, b as i64, c as i64) == 1 {
            out.push(Triple::new(r as i64, b as i64, c as i64).expect("positive"));
        }
    }
    out
}

/// Comparison of one generation path against the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SourceCheck {
    /// Number of triples the path emitted, in emission order.
    pub ordered_count: usize,
    /// Distinct canonical forms among them.
    pub canonical_count: usize,
    pub duplicates: Vec<Triple>,
    /// In the search, not produced.
    pub missing: Vec<Triple>,
    /// Produced, not in the search.
    pub extra: Vec<Triple>,
}

impl SourceCheck {
    fn new(mut emitted: Vec<Triple>, dup_key: fn(Triple) -> Triple, oracle: &[Triple]) -> Self {
        let ordered_count = emitted.len();
        let mut keyed: Vec<Triple> = emitted.iter().copied().map(dup_key).collect();
        keyed.sort_unstable();
        let mut duplicates: Vec<Triple> = keyed.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
        duplicates.dedup();
        for t in &mut emitted {
            *t = t.canonical();
        }
        emitted.sort_unstable();
        emitted.dedup();
        let (missing, extra) = diff(oracle, &emitted);
        Self { ordered_count, canonical_count: emitted.len(), duplicates, missing, extra }
    }

    pub fn is_clean(&self) -> bool {
        self.duplicates.is_empty() && self.missing.is_empty() && self.extra.is_empty()
    }
}

/// `(left \ right, right \ left)` for sorted, deduplicated inputs.
fn diff(left: &[Triple], right: &[Triple]) -> (Vec<Triple>, Vec<Triple>) {
    let (mut i, mut j) = (0, 0);
    let (mut only_left, mut only_right) = (Vec::new(), Vec::new());
    while i < left.len() || j < right.len() {
        match (left.get(i), right.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                only_left.push(*x);
                i += 1;
            }
            (Some(_), Some(y)) => {
                only_right.push(*y);
                j += 1;
            }
            (Some(x), None) => {
                only_left.push(*x);
                i += 1;
            }
            (None, Some(y)) => {
                only_right.push(*y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    (only_left, only_right)
}

/// The 60° → 120° map checked over the whole searched 60° set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionCheck {
    /// Non-equilateral 60° triples mapped.
    pub domain_count: usize,
    /// Distinct canonical images.
    pub image_count: usize,
    /// Ordered images hit more than once.
    pub non_injective: Vec<Triple>,
    /// Inputs whose image failed, or is not a primitive 120° triple.
    pub rejected: Vec<Triple>,
    /// Inputs where `from_sub(to_sub(t)) != t` or the gcd changed.
    pub round_trip_failures: Vec<Triple>,
    /// In the 120° search, not hit.
    pub missing: Vec<Triple>,
    /// Hit, not in the 120° search.
    pub extra: Vec<Triple>,
}

impl BijectionCheck {
    pub fn run(sixty: &[Triple], sub: &[Triple]) -> Self {
        let mut images = Vec::new();
        let mut rejected = Vec::new();
        let mut round_trip_failures = Vec::new();
        let domain: Vec<Triple> = sixty.iter().copied().filter(|t| !t.is_equilateral()).collect();
        for &t in &domain {
            let image = match to_sub(t) {
                Ok(y) if is_primitive(Family::OneTwenty, y).unwrap_or(false) => y,
                _ => {
                    rejected.push(t);
                    continue;
                }
            };
            let back_ok = from_sub(image).map(|x| x == t).unwrap_or(false);
            let gcd_ok = triple_gcd3(t.a(), t.b(), t.c()) == triple_gcd3(image.a(), image.b(), image.c());
            if !back_ok || !gcd_ok {
                round_trip_failures.push(t);
            }
            images.push(image);
        }
        images.sort_unstable();
        let mut non_injective: Vec<Triple> =
            images.windows(2).filter(|w| w[0] == w[1]).map(|w| w[0]).collect();
        non_injective.dedup();
        let mut canonical: Vec<Triple> = images.iter().map(|t| t.canonical()).collect();
        canonical.sort_unstable();
        canonical.dedup();
        let (missing, extra) = diff(sub, &canonical);
        Self {
            domain_count: domain.len(),
            image_count: canonical.len(),
            non_injective,
            rejected,
            round_trip_failures,
            missing,
            extra,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.non_injective.is_empty()
            && self.rejected.is_empty()
            && self.round_trip_failures.is_empty()
            && self.missing.is_empty()
            && self.extra.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub family: u32,
    pub max_a: i64,
    pub oracle_count: usize,
    pub tree: SourceCheck,
    pub params: SourceCheck,
    /// Only for the 120° family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bijection: Option<BijectionCheck>,
    pub pass: bool,
}

/// Tree output with twins, plus `(1, 1, 1)` for 60°.
pub fn tree_triples(family: Family, max_a: i64) -> Result<Vec<Triple>> {
    TreeEnumerator::new(family, max_a)?
        .with_twins(true)
        .with_equilateral(true)
        .map(|n| n.map(|n| n.triple))
        .collect()
}

/// Parametrization output: both variants for 60° (plus `(1, 1, 1)`),
/// the single map for 120°. Ordered by `m`, `n`, then variant.
pub fn param_triples(family: Family, max_a: i64) -> Result<Vec<Triple>> {
    if max_a < 1 {
        return Err(Error::InvalidBound(max_a));
    }
    let mut out = Vec::new();
    if family == Family::Sixty {
        out.push(Triple::new(1, 1, 1)?);
    }
    for p in valid_pairs(max_a)? {
        match family {
            Family::Sixty => {
                out.push(eisenstein_from_params(p.with_variant(Variant::Plus))?);
                out.push(eisenstein_from_params(p.with_variant(Variant::Minus))?);
            }
            Family::OneTwenty => out.push(sub_eisenstein_from_params(p)?),
        }
    }
    Ok(out)
}

fn certify_against(
    family: Family,
    max_a: i64,
    oracle: &[Triple],
    sixty_oracle: &[Triple],
) -> Result<CertificationReport> {
    let tree = SourceCheck::new(tree_triples(family, max_a)?, |t| t, oracle);
    let params_key: fn(Triple) -> Triple = match family {
        Family::Sixty => |t| t,
        Family::OneTwenty => Triple::canonical,
    };
    let params = SourceCheck::new(param_triples(family, max_a)?, params_key, oracle);
    let bijection = (family == Family::OneTwenty).then(|| BijectionCheck::run(sixty_oracle, oracle));
    let pass = tree.is_clean() && params.is_clean() && bijection.as_ref().is_none_or(|b| b.is_clean());
    Ok(CertificationReport {
        family: family.degrees(),
        max_a,
        oracle_count: oracle.len(),
        tree,
        params,
        bijection,
        pass,
    })
}

/// Checks the tree, the parametrization and (for 120°) the bijection
/// against [`brute_force`] up to `max_a`.
pub fn certify(family: Family, max_a: i64) -> Result<CertificationReport> {
    let sixty = brute_force(Family::Sixty, max_a)?;
    match family {
        Family::Sixty => certify_against(family, max_a, &sixty, &sixty),
        Family::OneTwenty => {
            let sub = brute_force(Family::OneTwenty, max_a)?;
            certify_against(family, max_a, &sub, &sixty)
        }
    }
}

/// Reports for both families, sharing one search per family.
pub fn certify_both(max_a: i64) -> Result<[CertificationReport; 2]> {
    let sixty = brute_force(Family::Sixty, max_a)?;
    let sub = brute_force(Family::OneTwenty, max_a)?;
    Ok([
        certify_against(Family::Sixty, max_a, &sixty, &sixty)?,
        certify_against(Family::OneTwenty, max_a, &sub, &sixty)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    /// Naive triple loop over every side combination.
    fn naive(family: Family, max_a: i64) -> Vec<Triple> {
        let mut out = Vec::new();
        for a in 1..=max_a {
            for b in 1..=2 * max_a {
                for c in 1..=b {
                    let x = t(a, b, c);
                    if is_primitive(family, x).unwrap() {
                        out.push(x);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn small_examples() {
        assert_eq!(brute_force(Family::OneTwenty, 7), Ok(vec![t(7, 5, 3)]));
        assert_eq!(brute_force(Family::OneTwenty, 13), Ok(vec![t(7, 5, 3), t(13, 8, 7)]));
        assert_eq!(brute_force(Family::Sixty, 1), Ok(vec![t(1, 1, 1)]));
        assert_eq!(brute_force(Family::Sixty, 6), Ok(vec![t(1, 1, 1)]));
        assert!(brute_force(Family::Sixty, 0).is_err());
    }

    #[test]
    fn hand_checkable_lists_up_to_31() {
        assert_eq!(
            brute_force(Family::OneTwenty, 31).unwrap(),
            vec![t(7, 5, 3), t(13, 8, 7), t(19, 16, 5), t(31, 24, 11)]
        );
        assert_eq!(
            brute_force(Family::Sixty, 31).unwrap(),
            vec![
                t(1, 1, 1),
                t(7, 8, 3),
                t(7, 8, 5),
                t(13, 15, 7),
                t(13, 15, 8),
                t(19, 21, 5),
                t(19, 21, 16),
                t(31, 35, 11),
                t(31, 35, 24),
            ]
        );
    }

    #[test]
    fn matches_naive_search() {
        for family in Family::ALL {
            assert_eq!(brute_force(family, 150).unwrap(), naive(family, 150));
        }
    }

    #[test]
    fn output_is_strictly_sorted() {
        for family in Family::ALL {
            let v = brute_force(family, 3000).unwrap();
            assert!(v.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn certify_small_bound() {
        let r = certify(Family::OneTwenty, 7).unwrap();
        assert!(r.pass);
        assert_eq!(r.oracle_count, 1);
        assert_eq!(r.tree.ordered_count, 2);
        assert_eq!(r.tree.canonical_count, 1);
        let s = certify(Family::Sixty, 1).unwrap();
        assert!(s.pass);
        assert_eq!(s.oracle_count, 1);
    }

    #[test]
    fn diff_detects_both_sides() {
        let (l, r) = diff(&[t(1, 1, 1), t(7, 5, 3)], &[t(7, 5, 3), t(13, 8, 7)]);
        assert_eq!(l, vec![t(1, 1, 1)]);
        assert_eq!(r, vec![t(13, 8, 7)]);
    }

    #[test]
    fn source_check_reports_duplicates_and_gaps() {
        let oracle = vec![t(7, 5, 3), t(13, 8, 7)];
        let c = SourceCheck::new(vec![t(7, 5, 3), t(7, 5, 3), t(19, 16, 5)], |x| x, &oracle);
        assert_eq!(c.duplicates, vec![t(7, 5, 3)]);
        assert_eq!(c.missing, vec![t(13, 8, 7)]);
        assert_eq!(c.extra, vec![t(19, 16, 5)]);
        assert!(!c.is_clean());
    }

    #[test]
    fn overflow_bound() {
        assert_eq!(brute_force(Family::Sixty, 3_000_000_000), Err(Error::Overflow));
    }
}
