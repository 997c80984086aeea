//! Group elements for the supported reflection-group families.
//!
//! One concrete element type covers all families:
//! * symmetric(n): a permutation of `{0..n-1}`, colors all zero;
//! * wreath(l, n): a permutation plus a vector of colors mod `l`
//!   (the element maps the i-th plane by the l-th rotation to the power
//!   `colors[i]`, then permutes plane indices by `perm`);
//! * dihedral(m): `perm = [0]`, `colors = [rotation mod m, reflection mod 2]`
//!   encoding `r^j s^e`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Element of a reflection group, interpreted relative to a `GroupSpec`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement {
    pub perm: Vec<usize>,
    pub colors: Vec<u32>,
}

impl GroupElement {
    pub fn identity_perm(n: usize) -> Self {
        GroupElement {
            perm: (0..n).collect(),
            colors: vec![0; n],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
            && self.colors.iter().all(|&c| c == 0)
    }

    /// Transposition (i j) with no colors, for symmetric/wreath groups.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        GroupElement {
            perm,
            colors: vec![0; n],
        }
    }

    /// The color generator at site `i` to the power `k`.
    pub fn color_gen(n: usize, i: usize, k: u32, modulus: u32) -> Self {
        let mut colors = vec![0; n];
        colors[i] = k % modulus;
        GroupElement {
            perm: (0..n).collect(),
            colors,
        }
    }

    /// Dihedral element `r^j s^e`.
    pub fn dihedral(m: u32, j: u32, e: u32) -> Self {
        GroupElement {
            perm: vec![0],
            colors: vec![j % m, e % 2],
        }
    }

    /// Wreath/symmetric composition: `(self * rhs)(v) = self(rhs(v))`.
    pub fn compose_wreath(&self, rhs: &GroupElement, modulus: u32) -> GroupElement {
        let n = self.perm.len();
        debug_assert_eq!(rhs.perm.len(), n);
        let perm = (0..n).map(|i| self.perm[rhs.perm[i]]).collect();
        let colors = (0..n)
            .map(|i| (rhs.colors[i] + self.colors[rhs.perm[i]]) % modulus)
            .collect();
        GroupElement { perm, colors }
    }

    pub fn inverse_wreath(&self, modulus: u32) -> GroupElement {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            perm[p] = i;
        }
        let colors = (0..n)
            .map(|j| (modulus - self.colors[perm[j]]) % modulus)
            .collect();
        GroupElement { perm, colors }
    }

    pub fn compose_dihedral(&self, rhs: &GroupElement, m: u32) -> GroupElement {
        // (j, e) * (j', e') = (j + (-1)^e j', e + e')
        let (j, e) = (self.colors[0], self.colors[1]);
        let (j2, e2) = (rhs.colors[0], rhs.colors[1]);
        let jj = if e == 0 {
            (j + j2) % m
        } else {
            (j + m - j2 % m) % m
        };
        GroupElement::dihedral(m, jj, e + e2)
    }

    pub fn inverse_dihedral(&self, m: u32) -> GroupElement {
        let (j, e) = (self.colors[0], self.colors[1]);
        if e == 0 {
            GroupElement::dihedral(m, (m - j % m) % m, 0)
        } else {
            GroupElement::dihedral(m, j, 1)
        }
    }

    /// Cycle type of the permutation part, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?};{:?})", self.perm, self.colors)
    }
}

/// Serializes as `perm;colors` with 1-based permutation images.
pub fn format_element(g: &GroupElement) -> String {
    let perm: Vec<String> = g.perm.iter().map(|p| (p + 1).to_string()).collect();
    let colors: Vec<String> = g.colors.iter().map(|c| c.to_string()).collect();
    format!("{};{}", perm.join(","), colors.join(","))
}

pub fn parse_element(text: &str) -> Option<GroupElement> {
    let (p, c) = text.split_once(';')?;
    let perm: Option<Vec<usize>> = p
        .split(',')
        .map(|s| s.trim().parse::<usize>().ok().and_then(|v| v.checked_sub(1)))
        .collect();
    let colors: Option<Vec<u32>> = c.split(',').map(|s| s.trim().parse().ok()).collect();
    Some(GroupElement {
        perm: perm?,
        colors: colors?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wreath_composition() {
        // transposition conjugating a color generator moves the site
        let s = GroupElement::transposition(2, 0, 1);
        let g0 = GroupElement::color_gen(2, 0, 1, 2);
        let conj = s
            .compose_wreath(&g0, 2)
            .compose_wreath(&s.inverse_wreath(2), 2);
        assert_eq!(conj, GroupElement::color_gen(2, 1, 1, 2));
    }

    #[test]
    fn dihedral_relations() {
        let m = 6;
        let r = GroupElement::dihedral(m, 1, 0);
        let s = GroupElement::dihedral(m, 0, 1);
        // s r s = r^{-1}
        let srs = s.compose_dihedral(&r, m).compose_dihedral(&s, m);
        assert_eq!(srs, r.inverse_dihedral(m));
        // r^m = 1
        let mut p = GroupElement::dihedral(m, 0, 0);
        for _ in 0..m {
            p = p.compose_dihedral(&r, m);
        }
        assert!(p.is_identity());
    }

    #[test]
    fn element_round_trip() {
        let g = GroupElement {
            perm: vec![1, 0, 2],
            colors: vec![0, 2, 1],
        };
        assert_eq!(parse_element(&format_element(&g)).unwrap(), g);
    }
}
