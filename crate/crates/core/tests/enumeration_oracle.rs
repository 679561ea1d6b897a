//! A deliberately naive enumerator: fill the Cayley table row by row as a
//! Latin square with identity in position 0, reject any partial table with a
//! defined associativity violation, then sort the complete tables into
//! classes by exhaustive bijection search.

mod common;

use common::brute_force_rows;
use involute_core::enumerate::{enumerate_groups, EnumerationConfig};

const NONE: usize = usize::MAX;

struct Naive {
    n: usize,
    t: Vec<usize>,
    complete: Vec<Vec<Vec<usize>>>,
}

impl Naive {
    fn get(&self, a: usize, b: usize) -> usize {
        self.t[a * self.n + b]
    }

    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for a in 1..n {
            for b in 1..n {
                let ab = self.get(a, b);
                if ab == NONE {
                    continue;
                }
                for c in 1..n {
                    let bc = self.get(b, c);
                    if bc == NONE {
                        continue;
                    }
                    let (l, r) = (self.get(ab, c), self.get(a, bc));
                    if l != NONE && r != NONE && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(&mut self, cell: usize) {
        let n = self.n;
        if cell == n * n {
            let rows = (0..n)
                .map(|a| self.t[a * n..(a + 1) * n].to_vec())
                .collect();
            self.complete.push(rows);
            return;
        }
        let (a, b) = (cell / n, cell % n);
        if self.t[cell] != NONE {
            return self.fill(cell + 1);
        }
        for v in 0..n {
            let in_row = (0..n).any(|x| self.get(a, x) == v);
            let in_col = (0..n).any(|x| self.get(x, b) == v);
            if in_row || in_col {
                continue;
            }
            self.t[cell] = v;
            if self.associative_so_far() {
                self.fill(cell + 1);
            }
            self.t[cell] = NONE;
        }
    }
}

fn naive_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut s = Naive {
        n,
        t: vec![NONE; n * n],
        complete: Vec::new(),
    };
    for x in 0..n {
        s.t[x] = x;
        s.t[x * n] = x;
    }
    s.fill(0);
    s.complete
}

fn sorted_orders(rows: &[Vec<usize>]) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..rows.len())
        .map(|x| {
            let (mut p, mut k) = (x, 1);
            while p != 0 {
                p = rows[p][x];
                k += 1;
            }
            k
        })
        .collect();
    orders.sort_unstable();
    orders
}

fn classes(tables: &[Vec<Vec<usize>>]) -> Vec<&Vec<Vec<usize>>> {
    let mut reps: Vec<(Vec<usize>, &Vec<Vec<usize>>)> = Vec::new();
    for t in tables {
        let key = sorted_orders(t);
        let known = reps
            .iter()
            .any(|(k, r)| *k == key && brute_force_rows(r, t));
        if !known {
            reps.push((key, t));
        }
    }
    reps.into_iter().map(|(_, r)| r).collect()
}

// Number of Cayley tables on {0..n-1} with identity 0: the sum over
// classes of (n-1)!/|Aut G|.
const TABLE_COUNTS: [usize; 9] = [0, 1, 1, 1, 4, 6, 80, 120, 2760];
const CLASS_COUNTS: [usize; 9] = [0, 1, 1, 1, 2, 1, 2, 1, 5];

#[test]
fn naive_search_matches_enumerator() {
    for n in 1..=8 {
        let tables = naive_tables(n);
        assert_eq!(tables.len(), TABLE_COUNTS[n], "tables of order {n}");
        let reps = classes(&tables);
        assert_eq!(reps.len(), CLASS_COUNTS[n], "classes of order {n}");

        let res = enumerate_groups(n, &EnumerationConfig::default()).unwrap();
        assert_eq!(res.groups.len(), reps.len(), "order {n}");
        for g in &res.groups {
            let rows = g.rows();
            let hits = reps.iter().filter(|r| brute_force_rows(r, &rows)).count();
            assert_eq!(hits, 1, "order {n}: {}", g.display_name());
        }
    }
}
