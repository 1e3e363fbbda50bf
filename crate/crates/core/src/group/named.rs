use super::{
    central_product, group_from_permutations, wreath_with_c2, ElemId, FiniteGroup, Perm,
};
use crate::error::{Error, Result};

/// Names accepted by [`named_group`]. `n` stands for a positive integer;
/// `Dn` is the dihedral group of order `n`.
pub const NAMED_GROUPS: &[&str] = &[
    "Cn", "Sn", "An", "Dn", "Q8", "V4", "SL23", "SL25", "ES32", "A5wrC2",
];

/// Builds one of the standard groups listed in [`NAMED_GROUPS`].
pub fn named_group(name: &str, cap: usize) -> Result<FiniteGroup> {
    let g = match name {
        "Q8" => quaternion(cap)?,
        "V4" => perms(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]], cap)?,
        "SL23" => special_linear_2(3, cap)?,
        "SL25" => special_linear_2(5, cap)?,
        "ES32" => {
            let q = quaternion(cap)?;
            let z = central_involution(&q);
            central_product(&q, &q, &[(z, z)], cap)?
        }
        "A5wrC2" => wreath_with_c2(&alternating(5, cap)?, cap)?,
        _ => parametrized(name, cap)?,
    };
    Ok(g.with_label(name))
}

/// Whether [`named_group`] accepts `name`, without building the group.
pub fn is_named_group(name: &str) -> bool {
    matches!(name, "Q8" | "V4" | "SL23" | "SL25" | "ES32" | "A5wrC2") || parse_parametrized(name).is_some()
}

fn parse_parametrized(name: &str) -> Option<(char, usize)> {
    let mut chars = name.chars();
    let kind = chars.next()?;
    let rest = chars.as_str();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0') {
        return None;
    }
    let n: usize = rest.parse().ok()?;
    match kind {
        'C' | 'S' | 'A' if n <= 64 => Some((kind, n)),
        'D' if n <= 64 && n % 2 == 0 => Some((kind, n)),
        _ => None,
    }
}

fn parametrized(name: &str, cap: usize) -> Result<FiniteGroup> {
    match parse_parametrized(name) {
        Some(('C', n)) => cyclic(n, cap),
        Some(('S', n)) => symmetric(n, cap),
        Some(('A', n)) => alternating(n, cap),
        Some(('D', n)) => dihedral(n, cap),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn perms(points: usize, gens: &[&[&[usize]]], cap: usize) -> Result<FiniteGroup> {
    let gens = gens
        .iter()
        .map(|cycles| {
            let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
            Perm::from_cycles(points, &cycles)
        })
        .collect::<Result<Vec<_>>>()?;
    group_from_permutations(points, &gens, cap)
}

fn cycle(points: usize, len: usize) -> Result<Perm> {
    if len < 2 {
        return Ok(Perm::identity(points));
    }
    Perm::from_cycles(points, &[(0..len).collect()])
}

fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
    group_from_permutations(n, &[cycle(n, n)?], cap)
}

fn symmetric(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return group_from_permutations(n, &[], cap);
    }
    group_from_permutations(n, &[cycle(n, 2)?, cycle(n, n)?], cap)
}

fn alternating(n: usize, cap: usize) -> Result<FiniteGroup> {
    let gens = (2..n)
        .map(|i| Perm::from_cycles(n, &[vec![0, 1, i]]))
        .collect::<Result<Vec<_>>>()?;
    group_from_permutations(n, &gens, cap)
}

/// Dihedral group of order `n` (so `n/2` rotations).
fn dihedral(n: usize, cap: usize) -> Result<FiniteGroup> {
    let m = n / 2;
    match m {
        1 => cyclic(2, cap),
        2 => perms(4, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]], cap),
        _ => {
            let reflection: Vec<u16> = (0..m).map(|i| ((m - i) % m) as u16).collect();
            group_from_permutations(m, &[cycle(m, m)?, Perm::from_images(reflection)?], cap)
        }
    }
}

/// Left regular representation of Q8 on `{±1, ±i, ±j, ±k}`.
fn quaternion(cap: usize) -> Result<FiniteGroup> {
    // point 2u + s is the unit u in {1, i, j, k} with sign (-1)^s
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let left = |u: usize| -> Result<Perm> {
        let images = (0..8)
            .map(|p| {
                let (v, s) = (p / 2, p % 2 == 1);
                let (w, t) = UNIT[u][v];
                (2 * w + usize::from(s ^ t)) as u16
            })
            .collect();
        Perm::from_images(images)
    };
    group_from_permutations(8, &[left(1)?, left(2)?], cap)
}

fn central_involution(q: &FiniteGroup) -> ElemId {
    q.elements()
        .find(|&x| q.element_order(x) == 2)
        .expect("Q8 has an involution")
}

/// `SL(2, p)` acting on the nonzero vectors of `F_p^2`.
fn special_linear_2(p: usize, cap: usize) -> Result<FiniteGroup> {
    let point = |x: usize, y: usize| x * p + y - 1;
    let act = |m: [[usize; 2]; 2]| -> Result<Perm> {
        let mut images = vec![0u16; p * p - 1];
        for x in 0..p {
            for y in 0..p {
                if x == 0 && y == 0 {
                    continue;
                }
                let nx = (m[0][0] * x + m[0][1] * y) % p;
                let ny = (m[1][0] * x + m[1][1] * y) % p;
                images[point(x, y)] = point(nx, ny) as u16;
            }
        }
        Perm::from_images(images)
    };
    group_from_permutations(p * p - 1, &[act([[1, 1], [0, 1]])?, act([[1, 0], [1, 1]])?], cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ELEMENT_CAP;

    #[test]
    fn orders() {
        let expect = [
            ("C1", 1),
            ("C6", 6),
            ("S1", 1),
            ("S4", 24),
            ("A2", 1),
            ("A5", 60),
            ("D2", 2),
            ("D4", 4),
            ("D8", 8),
            ("D10", 10),
            ("Q8", 8),
            ("V4", 4),
            ("SL23", 24),
            ("SL25", 120),
            ("ES32", 32),
        ];
        for (name, order) in expect {
            assert_eq!(named_group(name, DEFAULT_ELEMENT_CAP).unwrap().order(), order, "{name}");
        }
    }

    #[test]
    fn unknown_names() {
        for name in ["M11", "D5", "C", "C0", "X3", "S07", ""] {
            assert!(matches!(named_group(name, DEFAULT_ELEMENT_CAP), Err(Error::UnknownName(_))), "{name}");
            assert!(!is_named_group(name));
        }
    }

    #[test]
    fn q8_has_one_involution() {
        let q = named_group("Q8", DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(q.elements().filter(|&x| q.element_order(x) == 2).count(), 1);
        assert!(!q.is_abelian());
    }

    #[test]
    fn sl_centers() {
        for name in ["SL23", "SL25"] {
            let g = named_group(name, DEFAULT_ELEMENT_CAP).unwrap();
            assert_eq!(g.center().order(), 2, "{name}");
        }
    }
}
