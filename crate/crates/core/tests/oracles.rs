//! Independent reference computations compared against the library.

use std::collections::BTreeSet;

use kntab::cocrystal::generate_cocrystal;
use kntab::crystal::generate_crystal;
use kntab::rsk::column_insert;
use kntab::sjdt::{rectify, swap_adjacent_column_lengths};
use kntab::{Column, Letter, Partition, SkewTableau};
use proptest::prelude::*;

fn shapes(n: usize, max_size: usize) -> Vec<Partition> {
    (1..=max_size).flat_map(|s| Partition::all_of_size(s, n)).collect()
}

/// Weyl's dimension formula for the symplectic group `Sp(2n)`.
fn sp_dimension(shape: &Partition, n: usize) -> u64 {
    let l: Vec<i64> = shape.padded(n).iter().map(|&x| x as i64).collect();
    let rho: Vec<i64> = (0..n as i64).map(|i| n as i64 - i).collect();
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..n {
        for j in (i + 1)..n {
            num *= ((l[i] + rho[i]) - (l[j] + rho[j])) as i128;
            den *= (rho[i] - rho[j]) as i128;
        }
        for j in i..n {
            num *= ((l[i] + rho[i]) + (l[j] + rho[j])) as i128;
            den *= (rho[i] + rho[j]) as i128;
        }
    }
    assert_eq!(num % den, 0);
    (num / den) as u64
}

#[test]
fn crystal_sizes_match_weyl_dimension() {
    for n in 1..=3 {
        for shape in shapes(n, 6) {
            let g = generate_crystal(&shape, n).unwrap();
            assert_eq!(g.len() as u64, sp_dimension(&shape, n), "shape {} n {}", shape, n);
        }
    }
}

fn increasing_columns(n: usize, h: usize) -> Vec<Column> {
    let alphabet: Vec<Letter> = Letter::alphabet(n).collect();
    let mut out = Vec::new();
    let k = alphabet.len();
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize == h {
            let entries = (0..k).filter(|b| mask & (1 << b) != 0).map(|b| alphabet[b]).collect();
            out.push(Column::new(entries).unwrap());
        }
    }
    out
}

fn brute_force_kn(shape: &Partition, n: usize) -> BTreeSet<String> {
    let heights = shape.conjugate().parts().to_vec();
    let pools: Vec<Vec<Column>> = heights.iter().map(|&h| increasing_columns(n, h)).collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; heights.len()];
    'outer: loop {
        let cols: Vec<Column> = idx.iter().zip(&pools).map(|(&i, p)| p[i].clone()).collect();
        let t = SkewTableau::straight(n, cols).unwrap();
        if t.is_kn() {
            out.insert(t.to_string());
        }
        for k in 0..idx.len() {
            idx[k] += 1;
            if idx[k] < pools[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    out
}

#[test]
fn crystal_vertices_are_all_kn_tableaux() {
    for (n, max) in [(2, 4), (3, 3)] {
        for shape in shapes(n, max) {
            let g = generate_crystal(&shape, n).unwrap();
            let from_crystal: BTreeSet<String> = g.vertices().iter().map(|t| t.to_string()).collect();
            assert_eq!(from_crystal, brute_force_kn(&shape, n), "shape {} n {}", shape, n);
        }
    }
    assert_eq!(brute_force_kn(&Partition::new(vec![1, 1]).unwrap(), 2).len(), 5);
}

/// Skew semistandard tableau as rows of cells, `None` for inner cells.
type Grid = Vec<Vec<Option<u32>>>;

fn classical_slide(g: &mut Grid, mut r: usize, mut c: usize) {
    loop {
        let below = g.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
        let right = g[r].get(c + 1).copied().flatten();
        let (nr, nc) = match (below, right) {
            (None, None) => break,
            (Some(_), None) => (r + 1, c),
            (None, Some(_)) => (r, c + 1),
            (Some(b), Some(x)) => {
                if b <= x {
                    (r + 1, c)
                } else {
                    (r, c + 1)
                }
            }
        };
        g[r][c] = g[nr][nc];
        r = nr;
        c = nc;
    }
    g[r].pop();
    if g[r].is_empty() {
        g.remove(r);
    }
}

fn classical_rectify(mut g: Grid) -> Grid {
    loop {
        let corner = (0..g.len()).rev().find_map(|r| {
            let c = g[r].iter().rposition(|x| x.is_none())?;
            let below_ok = g.get(r + 1).map_or(true, |row| row.get(c).map_or(true, |x| x.is_some()));
            let right_ok = g[r].get(c + 1).map_or(true, |x| x.is_some());
            (below_ok && right_ok).then_some((r, c))
        });
        match corner {
            Some((r, c)) => classical_slide(&mut g, r, c),
            None => return g,
        }
    }
}

fn grid_to_tableau(n: usize, g: &Grid) -> SkewTableau {
    let rows: Vec<Vec<Option<Letter>>> = g
        .iter()
        .map(|row| row.iter().map(|x| x.map(Letter::unbarred)).collect())
        .collect();
    SkewTableau::from_rows(n, &rows).unwrap()
}

/// Fills the skew shape `outer / inner` row by row, each cell drawing from
/// the values allowed by its left and upper neighbours.
fn fill(n: u32, outer: &[usize], inner: &[usize], choices: &[u32]) -> Option<Grid> {
    let mut g: Grid = Vec::new();
    let mut k = 0;
    for (r, &len) in outer.iter().enumerate() {
        let skip = inner.get(r).copied().unwrap_or(0);
        let mut row = vec![None; skip];
        for c in skip..len {
            let left = if c > skip { row[c - 1] } else { None };
            let up = if r > 0 { g[r - 1].get(c).copied().flatten() } else { None };
            let lo = left.unwrap_or(1).max(up.map_or(1, |u: u32| u + 1));
            // leave room for the cells still to come below in this column
            let below = outer.iter().skip(r + 1).filter(|&&l| l > c).count() as u32;
            if lo + below > n {
                return None;
            }
            let hi = n - below;
            let v = lo + choices[k % choices.len()] % (hi - lo + 1);
            k += 1;
            row.push(Some(v));
        }
        g.push(row);
    }
    Some(g)
}

fn skew_shape() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    prop::collection::vec(1usize..=4, 1..=4).prop_flat_map(|mut outer| {
        outer.sort_unstable_by(|a, b| b.cmp(a));
        let o = outer.clone();
        let inner = o.iter().map(|&p| 0..=p).collect::<Vec<_>>();
        (Just(outer), inner).prop_map(|(outer, mut inner)| {
            for r in 1..inner.len() {
                inner[r] = inner[r].min(inner[r - 1]);
            }
            (outer, inner)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn symplectic_slides_agree_with_classical_jdt_on_ssyt(
        (outer, inner) in skew_shape(),
        n in 2u32..=5,
        choices in prop::collection::vec(0u32..8, 1..20),
    ) {
        let g = fill(n, &outer, &inner, &choices);
        prop_assume!(g.is_some());
        let g = g.unwrap();
        prop_assume!(g.iter().flatten().any(|x| x.is_some()));
        let t = grid_to_tableau(n as usize, &g);
        prop_assert!(t.is_kn());
        let expected = grid_to_tableau(n as usize, &classical_rectify(g));
        prop_assert_eq!(rectify(&t).unwrap(), expected);
    }

    #[test]
    fn length_swap_is_the_unique_knuth_equivalent_pair(
        n in 4u32..=6,
        choices in prop::collection::vec(0u32..8, 1..20),
        lo in 1usize..=3,
        extra in 1usize..=2,
    ) {
        let hi = lo + extra;
        let outer: Vec<usize> = (0..hi).map(|r| if r < lo { 2 } else { 1 }).collect();
        let g = fill(n, &outer, &[], &choices);
        prop_assume!(g.is_some());
        let t = grid_to_tableau(n as usize, &g.unwrap());
        let (c1, c2) = (t.column(0).clone(), t.column(1).clone());
        let target = column_insert(n as usize, &t.reading_word()).unwrap();
        let (x, y) = swap_adjacent_column_lengths(n as usize, &c1, &c2).unwrap();

        // every pair of columns with swapped lengths over the same letters
        let mut pool: Vec<Letter> = c1.iter().chain(c2.iter()).collect();
        pool.sort();
        let mut found = Vec::new();
        for left in increasing_columns(n as usize, lo) {
            if left.iter().any(|l| l.is_barred()) {
                continue;
            }
            let mut rest = pool.clone();
            let mut ok = true;
            for l in left.iter() {
                match rest.iter().position(|&m| m == l) {
                    Some(p) => { rest.remove(p); }
                    None => { ok = false; break; }
                }
            }
            if !ok {
                continue;
            }
            let Ok(right) = Column::new(rest) else { continue };
            let placed = SkewTableau::from_column_sequence(n as usize, vec![left.clone(), right.clone()]);
            let Ok(placed) = placed else { continue };
            if !placed.is_kn() {
                continue;
            }
            if column_insert(n as usize, &placed.reading_word()).unwrap() == target {
                found.push((left, right));
            }
        }
        prop_assert_eq!(found, vec![(x, y)]);
    }
}

/// Hook-content formula for the number of semistandard tableaux of `shape`
/// with entries at most `r`.
fn ssyt_count(shape: &Partition, r: usize) -> u64 {
    let conj = shape.conjugate();
    let (mut num, mut den) = (1u128, 1u128);
    for (i, &len) in shape.parts().iter().enumerate() {
        for j in 0..len {
            let content = r as i64 + j as i64 - i as i64;
            if content <= 0 {
                return 0;
            }
            num *= content as u128;
            den *= (len - j + conj.part(j) - i - 1) as u128;
        }
    }
    (num / den) as u64
}

#[test]
fn cocrystal_sizes_match_hook_content() {
    for (n, max) in [(2, 5), (3, 4)] {
        for shape in shapes(n, max) {
            let g = generate_crystal(&shape, n).unwrap();
            let conj = shape.conjugate();
            let cols = shape.part(0);
            for v in (0..g.len()).step_by(7) {
                let t = g.vertex(v);
                for r in cols..=cols + 1 {
                    let cc = generate_cocrystal(t, r).unwrap();
                    assert_eq!(cc.len() as u64, ssyt_count(&conj, r), "{} r {}", t, r);
                }
            }
        }
    }
}
