use crate::codes::SelfDualType;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundStatus {
    Meets,
    Satisfies,
    Violates,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GriesmerCheck {
    pub rhs: usize,
    pub status: BoundStatus,
}

/// Griesmer bound for a quaternary `[n, k, d]` code: `n ≥ Σ_{i<k} ⌈d / 4^i⌉`.
pub fn griesmer_check(n: usize, k: usize, d: usize) -> GriesmerCheck {
    let mut rhs = 0;
    let mut q = 1usize;
    for _ in 0..k {
        rhs += d.div_ceil(q);
        q = q.saturating_mul(4);
    }
    let status = match n.cmp(&rhs) {
        core::cmp::Ordering::Equal => BoundStatus::Meets,
        core::cmp::Ordering::Greater => BoundStatus::Satisfies,
        core::cmp::Ordering::Less => BoundStatus::Violates,
    };
    GriesmerCheck { rhs, status }
}

/// Upper bound on the distance of a trace self-dual additive code of length `n`.
/// Type II requires even `n`.
pub fn extremal_selfdual_bound(n: usize, ty: SelfDualType) -> Option<usize> {
    let base = 2 * (n / 6);
    match ty {
        SelfDualType::TypeII => n.is_multiple_of(2).then_some(base + 2),
        SelfDualType::TypeI => Some(match n % 6 {
            0 => base + 1,
            5 => base + 3,
            _ => base + 2,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn griesmer_examples() {
        assert_eq!(
            griesmer_check(16, 3, 12),
            GriesmerCheck {
                rhs: 16,
                status: BoundStatus::Meets
            }
        );
        assert_eq!(griesmer_check(64, 4, 48).rhs, 64);
        assert_eq!(griesmer_check(9, 1, 9).status, BoundStatus::Meets);
        assert_eq!(griesmer_check(11, 2, 8).status, BoundStatus::Satisfies);
        assert_eq!(griesmer_check(9, 2, 8).status, BoundStatus::Violates);
    }

    #[test]
    fn extremal_examples() {
        assert_eq!(extremal_selfdual_bound(12, SelfDualType::TypeII), Some(6));
        assert_eq!(extremal_selfdual_bound(6, SelfDualType::TypeII), Some(4));
        assert_eq!(extremal_selfdual_bound(13, SelfDualType::TypeI), Some(6));
        assert_eq!(extremal_selfdual_bound(7, SelfDualType::TypeII), None);
        for (n, d) in [(5, 3), (11, 5), (17, 7), (29, 11), (6, 3), (12, 5)] {
            assert_eq!(
                extremal_selfdual_bound(n, SelfDualType::TypeI),
                Some(d),
                "n={n}"
            );
        }
    }
}
