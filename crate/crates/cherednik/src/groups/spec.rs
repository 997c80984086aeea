//! Group families, element enumeration, symplectic actions and conjugacy.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::GroupElement;
use crate::error::{CherednikError, Result};
use crate::exact::scalar::{int, Scalar};
use crate::linalg::QMatrix;

/// Supported reflection-group families.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GroupFamily {
    /// S_n acting on the 2n-dimensional space h + h*, h = C^n.
    Symmetric(usize),
    /// Dihedral group of order 2m acting on h + h*, h = C^2.
    /// Rational matrices exist only for m in {3, 4, 6}.
    Dihedral(u32),
    /// Wreath product S_n x| (Z/l)^n acting on (C^2)^n.
    /// Rational rotation matrices exist only for l in {1, 2, 3, 4, 6}.
    Wreath(u32, usize),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub family: GroupFamily,
}

/// One conjugacy class of symplectic reflections.
#[derive(Clone, Debug)]
pub struct ReflectionClass {
    /// Stable identifier: "S" for the permutation-type class, "G1".."Gk"
    /// for color-type classes, "C1"/"C2" for dihedral reflection classes.
    pub id: String,
    pub representative: GroupElement,
    pub members: Vec<GroupElement>,
}

impl GroupSpec {
    pub fn symmetric(n: usize) -> Self {
        assert!(n >= 1);
        GroupSpec {
            family: GroupFamily::Symmetric(n),
        }
    }

    pub fn dihedral(m: u32) -> Self {
        assert!(m >= 3);
        GroupSpec {
            family: GroupFamily::Dihedral(m),
        }
    }

    pub fn wreath(l: u32, n: usize) -> Self {
        assert!(l >= 1 && n >= 1);
        GroupSpec {
            family: GroupFamily::Wreath(l, n),
        }
    }

    /// Parses "sn:3", "dihedral:6", "wreath:2x3".
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let t = text.trim();
        let (kind, arg) = t
            .split_once(':')
            .ok_or_else(|| CherednikError::Parse(format!("group spec `{t}`")))?;
        match kind {
            "sn" => {
                let n: usize = arg
                    .parse()
                    .map_err(|_| CherednikError::Parse(format!("group size `{arg}`")))?;
                if n < 1 {
                    return Err(CherednikError::Parse("sn:n needs n >= 1".into()));
                }
                Ok(GroupSpec::symmetric(n))
            }
            "dihedral" => {
                let m: u32 = arg
                    .parse()
                    .map_err(|_| CherednikError::Parse(format!("dihedral order `{arg}`")))?;
                if m < 3 {
                    return Err(CherednikError::Parse("dihedral:m needs m >= 3".into()));
                }
                Ok(GroupSpec::dihedral(m))
            }
            "wreath" => {
                let (l, n) = arg
                    .split_once('x')
                    .ok_or_else(|| CherednikError::Parse(format!("wreath spec `{arg}`")))?;
                let l: u32 = l
                    .parse()
                    .map_err(|_| CherednikError::Parse(format!("cyclic order `{l}`")))?;
                let n: usize = n
                    .parse()
                    .map_err(|_| CherednikError::Parse(format!("wreath rank `{n}`")))?;
                if l < 1 || n < 1 {
                    return Err(CherednikError::Parse("wreath:lxn needs l,n >= 1".into()));
                }
                Ok(GroupSpec::wreath(l, n))
            }
            _ => Err(CherednikError::Parse(format!("unknown group family `{kind}`"))),
        }
    }

    /// Number of x-coordinates (half the symplectic dimension).
    pub fn num_xvars(&self) -> usize {
        match self.family {
            GroupFamily::Symmetric(n) => n,
            GroupFamily::Dihedral(_) => 2,
            GroupFamily::Wreath(_, n) => n,
        }
    }

    pub fn symplectic_dim(&self) -> usize {
        2 * self.num_xvars()
    }

    pub fn order(&self) -> usize {
        match self.family {
            GroupFamily::Symmetric(n) => factorial(n),
            GroupFamily::Dihedral(m) => 2 * m as usize,
            GroupFamily::Wreath(l, n) => factorial(n) * (l as usize).pow(n as u32),
        }
    }

    fn color_modulus(&self) -> u32 {
        match self.family {
            GroupFamily::Symmetric(_) => 1,
            GroupFamily::Dihedral(m) => m,
            GroupFamily::Wreath(l, _) => l,
        }
    }

    pub fn identity(&self) -> GroupElement {
        match self.family {
            GroupFamily::Symmetric(n) | GroupFamily::Wreath(_, n) => {
                GroupElement::identity_perm(n)
            }
            GroupFamily::Dihedral(m) => GroupElement::dihedral(m, 0, 0),
        }
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        match self.family {
            GroupFamily::Symmetric(_) | GroupFamily::Wreath(_, _) => {
                a.compose_wreath(b, self.color_modulus())
            }
            GroupFamily::Dihedral(m) => a.compose_dihedral(b, m),
        }
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        match self.family {
            GroupFamily::Symmetric(_) | GroupFamily::Wreath(_, _) => {
                a.inverse_wreath(self.color_modulus())
            }
            GroupFamily::Dihedral(m) => a.inverse_dihedral(m),
        }
    }

    pub fn conjugate(&self, g: &GroupElement, by: &GroupElement) -> GroupElement {
        self.mul(&self.mul(by, g), &self.inv(by))
    }

    /// All group elements, in a stable order.
    pub fn elements(&self) -> Vec<GroupElement> {
        match self.family {
            GroupFamily::Symmetric(n) => permutations(n)
                .into_iter()
                .map(|perm| GroupElement {
                    perm,
                    colors: vec![0; n],
                })
                .collect(),
            GroupFamily::Wreath(l, n) => {
                let mut out = Vec::with_capacity(self.order());
                for perm in permutations(n) {
                    let mut colors = vec![0u32; n];
                    loop {
                        out.push(GroupElement {
                            perm: perm.clone(),
                            colors: colors.clone(),
                        });
                        // increment the color vector in base l
                        let mut i = 0;
                        while i < n {
                            colors[i] += 1;
                            if colors[i] < l {
                                break;
                            }
                            colors[i] = 0;
                            i += 1;
                        }
                        if i == n {
                            break;
                        }
                    }
                }
                out
            }
            GroupFamily::Dihedral(m) => {
                let mut out = Vec::with_capacity(2 * m as usize);
                for e in 0..2 {
                    for j in 0..m {
                        out.push(GroupElement::dihedral(m, j, e));
                    }
                }
                out
            }
        }
    }

    /// Rational 2x2 rotation of order `l` in SL_2 (columns are the images
    /// of the symplectic basis (x, y) of one plane).
    fn cyclic_matrix(l: u32) -> Result<QMatrix> {
        let m = |a: i64, b: i64, c: i64, d: i64| {
            QMatrix::from_rows(vec![vec![int(a), int(b)], vec![int(c), int(d)]])
        };
        match l {
            1 => Ok(m(1, 0, 0, 1)),
            2 => Ok(m(-1, 0, 0, -1)),
            3 => Ok(m(0, -1, 1, -1)),
            4 => Ok(m(0, -1, 1, 0)),
            6 => Ok(m(0, -1, 1, 1)),
            _ => Err(CherednikError::Unsupported(format!(
                "cyclic group of order {l} has no rational symplectic plane action"
            ))),
        }
    }

    /// Rational 2x2 matrices of the dihedral generators acting on h = C^2:
    /// the rotation is the companion matrix of z^2 - (2cos(2pi/m)) z + 1.
    pub fn dihedral_h_generators(m: u32) -> Result<(QMatrix, QMatrix)> {
        let a = match m {
            3 => int(-1),
            4 => int(0),
            6 => int(1),
            _ => {
                return Err(CherednikError::Unsupported(format!(
                    "dihedral group of order 2*{m} is not rational; use the extension-field path"
                )))
            }
        };
        let r = QMatrix::from_rows(vec![vec![int(0), int(-1)], vec![int(1), a]]);
        let s = QMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        Ok((r, s))
    }

    /// Action of `g` on h (the y-coordinates); for wreath groups this mixes
    /// x and y within each plane, so it is only defined for symmetric and
    /// dihedral families.
    pub fn h_action(&self, g: &GroupElement) -> Result<QMatrix> {
        match self.family {
            GroupFamily::Symmetric(n) => {
                let mut m = QMatrix::zeros(n, n);
                for i in 0..n {
                    m[(g.perm[i], i)] = int(1);
                }
                Ok(m)
            }
            GroupFamily::Dihedral(dm) => {
                let (r, s) = GroupSpec::dihedral_h_generators(dm)?;
                let mut out = QMatrix::identity(2);
                for _ in 0..g.colors[0] {
                    out = r.mul_mat(&out);
                }
                if g.colors[1] % 2 == 1 {
                    out = out.mul_mat(&s);
                }
                Ok(out)
            }
            GroupFamily::Wreath(_, _) => Err(CherednikError::Unsupported(
                "wreath elements do not act on h alone".into(),
            )),
        }
    }

    /// Action matrix on V with basis (x_1..x_N, y_1..y_N).
    pub fn action_matrix(&self, g: &GroupElement) -> Result<QMatrix> {
        let nx = self.num_xvars();
        match self.family {
            GroupFamily::Symmetric(_) => {
                let mut m = QMatrix::zeros(2 * nx, 2 * nx);
                for i in 0..nx {
                    m[(g.perm[i], i)] = int(1);
                    m[(nx + g.perm[i], nx + i)] = int(1);
                }
                Ok(m)
            }
            GroupFamily::Wreath(l, n) => {
                let rot = GroupSpec::cyclic_matrix(l)?;
                let mut pow = QMatrix::identity(2);
                let mut pows = vec![pow.clone()];
                for _ in 1..l {
                    pow = rot.mul_mat(&pow);
                    pows.push(pow.clone());
                }
                let mut m = QMatrix::zeros(2 * n, 2 * n);
                for i in 0..n {
                    let r = &pows[g.colors[i] as usize];
                    let j = g.perm[i];
                    // x_i -> r00 x_j + r10 y_j ; y_i -> r01 x_j + r11 y_j
                    m[(j, i)] = r[(0, 0)].clone();
                    m[(n + j, i)] = r[(1, 0)].clone();
                    m[(j, n + i)] = r[(0, 1)].clone();
                    m[(n + j, n + i)] = r[(1, 1)].clone();
                }
                Ok(m)
            }
            GroupFamily::Dihedral(_) => {
                let h = self.h_action(g)?;
                // x-coordinates transform by the inverse transpose
                let hstar = h.inverse()?.transpose();
                let mut m = QMatrix::zeros(4, 4);
                for i in 0..2 {
                    for j in 0..2 {
                        m[(i, j)] = hstar[(i, j)].clone();
                        m[(2 + i, 2 + j)] = h[(i, j)].clone();
                    }
                }
                Ok(m)
            }
        }
    }

    /// The symplectic form on V: omega(x_i, y_j) = delta_ij.
    pub fn omega(&self) -> QMatrix {
        let nx = self.num_xvars();
        let mut m = QMatrix::zeros(2 * nx, 2 * nx);
        for i in 0..nx {
            m[(i, nx + i)] = int(1);
            m[(nx + i, i)] = int(-1);
        }
        m
    }

    /// Whether `g` is a symplectic reflection: rank(Id - g) = 2 on V.
    pub fn is_reflection(&self, g: &GroupElement) -> Result<bool> {
        let a = self.action_matrix(g)?;
        let id = QMatrix::identity(a.nrows());
        Ok((&id - &a).rank() == 2)
    }

    /// Class invariant used to name reflection classes.
    fn reflection_class_id(&self, g: &GroupElement) -> String {
        match self.family {
            GroupFamily::Symmetric(_) => "S".to_string(),
            GroupFamily::Wreath(_, _) => {
                if g.perm.iter().enumerate().all(|(i, &p)| i == p) {
                    let k = g.colors.iter().find(|&&c| c != 0).copied().unwrap_or(0);
                    format!("G{k}")
                } else {
                    "S".to_string()
                }
            }
            GroupFamily::Dihedral(m) => {
                if m % 2 == 0 && g.colors[0] % 2 == 1 {
                    "C2".to_string()
                } else {
                    "C1".to_string()
                }
            }
        }
    }

    /// Enumerates symplectic reflections grouped into conjugacy classes.
    pub fn classify_reflections(&self) -> Result<Vec<ReflectionClass>> {
        let elements = self.elements();
        let mut classes: BTreeMap<String, Vec<GroupElement>> = BTreeMap::new();
        for g in &elements {
            if self.is_reflection(g)? {
                classes
                    .entry(self.reflection_class_id(g))
                    .or_default()
                    .push(g.clone());
            }
        }
        // verify the names really are single conjugacy classes
        for (id, members) in &classes {
            let mut orbit: std::collections::BTreeSet<GroupElement> =
                std::collections::BTreeSet::new();
            let rep = members[0].clone();
            let mut stack = vec![rep];
            while let Some(g) = stack.pop() {
                if !orbit.insert(g.clone()) {
                    continue;
                }
                for h in &elements {
                    let c = self.conjugate(&g, h);
                    if !orbit.contains(&c) {
                        stack.push(c);
                    }
                }
            }
            let member_set: std::collections::BTreeSet<GroupElement> =
                members.iter().cloned().collect();
            if orbit != member_set {
                return Err(CherednikError::Internal(format!(
                    "reflection class {id} is not a single conjugacy class"
                )));
            }
        }
        Ok(classes
            .into_iter()
            .map(|(id, members)| ReflectionClass {
                id,
                representative: members[0].clone(),
                members,
            })
            .collect())
    }

    /// All conjugacy classes of the group (for characters), stable order.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GroupElement>> {
        let elements = self.elements();
        let mut remaining: std::collections::BTreeSet<GroupElement> =
            elements.iter().cloned().collect();
        let mut classes = Vec::new();
        for g in &elements {
            if !remaining.contains(g) {
                continue;
            }
            let mut orbit: std::collections::BTreeSet<GroupElement> =
                std::collections::BTreeSet::new();
            for h in &elements {
                orbit.insert(self.conjugate(g, h));
            }
            for x in &orbit {
                remaining.remove(x);
            }
            classes.push(orbit.into_iter().collect());
        }
        classes
    }

    /// Sign character (determinant on h); defined for Coxeter families.
    pub fn sign(&self, g: &GroupElement) -> Result<Scalar> {
        match self.family {
            GroupFamily::Symmetric(_) | GroupFamily::Dihedral(_) => {
                let h = self.h_action(g)?;
                let n = h.nrows();
                // determinant via char poly constant term: det = (-1)^n c_0
                let c0 = h.char_poly()[0].clone();
                Ok(if n % 2 == 0 { c0 } else { -c0 })
            }
            GroupFamily::Wreath(1, _) => GroupSpec::symmetric(self.num_xvars()).sign(g),
            GroupFamily::Wreath(_, _) => Err(CherednikError::Unsupported(
                "sign character requires a Coxeter family".into(),
            )),
        }
    }

    /// Generators: adjacent transpositions (and the first color generator);
    /// dihedral groups use (r, s).
    pub fn generators(&self) -> Vec<(String, GroupElement)> {
        match self.family {
            GroupFamily::Symmetric(n) => (1..n)
                .map(|i| {
                    (
                        format!("s{i}"),
                        GroupElement::transposition(n, i - 1, i),
                    )
                })
                .collect(),
            GroupFamily::Wreath(l, n) => {
                let mut gens: Vec<(String, GroupElement)> = (1..n)
                    .map(|i| {
                        (
                            format!("s{i}"),
                            GroupElement::transposition(n, i - 1, i),
                        )
                    })
                    .collect();
                if l > 1 {
                    gens.push(("gam".to_string(), GroupElement::color_gen(n, 0, 1, l)));
                }
                gens
            }
            GroupFamily::Dihedral(m) => vec![
                ("r".to_string(), GroupElement::dihedral(m, 1, 0)),
                ("s".to_string(), GroupElement::dihedral(m, 0, 1)),
            ],
        }
    }

    /// Expresses `g` as a word in `generators()` (indices into that list).
    pub fn element_word(&self, g: &GroupElement) -> Vec<usize> {
        match self.family {
            GroupFamily::Dihedral(_) => {
                let mut word = Vec::new();
                for _ in 0..g.colors[0] {
                    word.push(0);
                }
                if g.colors[1] % 2 == 1 {
                    word.push(1);
                }
                word
            }
            GroupFamily::Symmetric(n) | GroupFamily::Wreath(_, n) => {
                let l = self.color_modulus();
                let mut word = Vec::new();
                // g = (perm, 0) * (id, colors): emit color generators first
                // inside the word read right-to-left, so push perm part first.
                let mut perm = g.perm.clone();
                // decompose perm into adjacent transpositions via bubble sort;
                // s_i has generator index i-1
                let mut perm_word = Vec::new();
                loop {
                    let mut swapped = false;
                    for i in 0..n.saturating_sub(1) {
                        if perm[i] > perm[i + 1] {
                            perm.swap(i, i + 1);
                            perm_word.push(i);
                            swapped = true;
                        }
                    }
                    if !swapped {
                        break;
                    }
                }
                // bubble sort sorts perm by right-multiplication with the
                // recorded transpositions: perm * w = id, so perm = w^{-1}
                // read in reverse.
                perm_word.reverse();
                word.extend(perm_word);
                if l > 1 {
                    let gam_index = n - 1; // position of "gam" in generators()
                    for site in 0..n {
                        let k = g.colors[site];
                        if k == 0 {
                            continue;
                        }
                        // gamma_site^k = w * gam^k * w^{-1}, w = product moving 0 -> site
                        let mut move_word = Vec::new();
                        for i in (0..site).rev() {
                            move_word.push(i);
                        }
                        // w = s_{site-1,site} ... s_{0,1} maps 0 to site;
                        // gamma_site^k = w gam^k w^{-1}
                        word.extend(move_word.iter().copied());
                        for _ in 0..k {
                            word.push(gam_index);
                        }
                        word.extend(move_word.iter().rev().copied());
                    }
                }
                word
            }
        }
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(n, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut prefix, &mut used, &mut out);
    out
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GroupFamily::Symmetric(n) => write!(f, "sn:{n}"),
            GroupFamily::Dihedral(m) => write!(f, "dihedral:{m}"),
            GroupFamily::Wreath(l, n) => write!(f, "wreath:{l}x{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["sn:3", "dihedral:6", "wreath:2x3"] {
            assert_eq!(GroupSpec::parse(s).unwrap().to_string(), s);
        }
        assert!(GroupSpec::parse("sn").is_err());
        assert!(GroupSpec::parse("foo:3").is_err());
    }

    #[test]
    fn symmetric_three_reflections() {
        let g = GroupSpec::symmetric(3);
        let classes = g.classify_reflections().unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members.len(), 3);
        assert_eq!(classes[0].id, "S");
    }

    #[test]
    fn wreath_two_two_reflections() {
        let g = GroupSpec::wreath(2, 2);
        let classes = g.classify_reflections().unwrap();
        let sizes: Vec<(String, usize)> = classes
            .iter()
            .map(|c| (c.id.clone(), c.members.len()))
            .collect();
        // type (S): {s12, s12 g1 g2}; type (G): {g1, g2}
        assert_eq!(sizes, vec![("G1".into(), 2), ("S".into(), 2)]);
    }

    #[test]
    fn wreath_three_one_reflections() {
        let g = GroupSpec::wreath(3, 1);
        let classes = g.classify_reflections().unwrap();
        let sizes: Vec<(String, usize)> = classes
            .iter()
            .map(|c| (c.id.clone(), c.members.len()))
            .collect();
        assert_eq!(sizes, vec![("G1".into(), 1), ("G2".into(), 1)]);
    }

    #[test]
    fn dihedral_six_reflections() {
        let g = GroupSpec::dihedral(6);
        let classes = g.classify_reflections().unwrap();
        let sizes: Vec<(String, usize)> = classes
            .iter()
            .map(|c| (c.id.clone(), c.members.len()))
            .collect();
        assert_eq!(sizes, vec![("C1".into(), 3), ("C2".into(), 3)]);
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn action_is_homomorphism() {
        for spec in [
            GroupSpec::symmetric(3),
            GroupSpec::wreath(3, 2),
            GroupSpec::dihedral(6),
        ] {
            let els = spec.elements();
            assert_eq!(els.len(), spec.order());
            // spot-check products on a few pairs
            for a in els.iter().step_by(3) {
                for b in els.iter().step_by(5) {
                    let ma = spec.action_matrix(a).unwrap();
                    let mb = spec.action_matrix(b).unwrap();
                    let mab = spec.action_matrix(&spec.mul(a, b)).unwrap();
                    assert_eq!(ma.mul_mat(&mb), mab);
                }
            }
        }
    }

    #[test]
    fn omega_invariance() {
        for spec in [
            GroupSpec::symmetric(2),
            GroupSpec::wreath(3, 2),
            GroupSpec::dihedral(4),
        ] {
            let om = spec.omega();
            for g in spec.elements() {
                let a = spec.action_matrix(&g).unwrap();
                let lhs = a.transpose().mul_mat(&om).mul_mat(&a);
                assert_eq!(lhs, om, "omega not preserved in {spec}");
            }
        }
    }

    #[test]
    fn element_words_reconstruct() {
        for spec in [
            GroupSpec::symmetric(4),
            GroupSpec::wreath(3, 2),
            GroupSpec::dihedral(6),
        ] {
            let gens = spec.generators();
            for g in spec.elements() {
                let word = spec.element_word(&g);
                let mut acc = spec.identity();
                for idx in word {
                    acc = spec.mul(&acc, &gens[idx].1);
                }
                assert_eq!(acc, g, "word reconstruction failed in {spec}");
            }
        }
    }

    #[test]
    fn sign_character() {
        let g = GroupSpec::symmetric(3);
        let s = GroupElement::transposition(3, 0, 1);
        assert_eq!(g.sign(&s).unwrap(), int(-1));
        let d = GroupSpec::dihedral(6);
        assert_eq!(d.sign(&GroupElement::dihedral(6, 1, 0)).unwrap(), int(1));
        assert_eq!(d.sign(&GroupElement::dihedral(6, 0, 1)).unwrap(), int(-1));
    }
}
