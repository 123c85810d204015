use std::fmt;

/// Sign of the permutation that sorts `seq` (distinct entries).
pub fn sort_sign<T: Ord>(seq: &[T]) -> i32 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// An `m x r` rectangle with at most one marked box per column.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarkedDiagram {
    rows: usize,
    /// `marks[c]` is the 1-based row marked in column `c + 1`.
    marks: Vec<Option<usize>>,
}

impl MarkedDiagram {
    pub fn new(rows: usize, marks: Vec<Option<usize>>) -> Self {
        assert!(
            marks.iter().flatten().all(|&r| (1..=rows).contains(&r)),
            "mark outside the diagram"
        );
        MarkedDiagram { rows, marks }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.marks.len()
    }

    /// Marked row of column `c` (1-based).
    pub fn mark(&self, c: usize) -> Option<usize> {
        self.marks[c - 1]
    }

    pub fn marks(&self) -> &[Option<usize>] {
        &self.marks
    }

    /// Number of marked boxes `|D|`.
    pub fn count(&self) -> usize {
        self.marks.iter().flatten().count()
    }
}

impl fmt::Display for MarkedDiagram {
    /// One line per row, `X` for a marked box and `.` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 1..=self.rows {
            let line: Vec<&str> = self
                .marks
                .iter()
                .map(|m| if *m == Some(row) { "X" } else { "." })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// All `(m+1)^r` marked `m x r` diagrams, in lexicographic order of the
/// column marks (unmarked first).
pub fn enumerate_marked_diagrams(m: usize, r: usize) -> impl Iterator<Item = MarkedDiagram> {
    let total = (m + 1).checked_pow(r as u32).expect("too many diagrams");
    (0..total).map(move |mut code| {
        let mut marks = vec![None; r];
        for c in (0..r).rev() {
            let d = code % (m + 1);
            code /= m + 1;
            marks[c] = if d == 0 { None } else { Some(d) };
        }
        MarkedDiagram { rows: m, marks }
    })
}

/// Diagrams `D_1, ..., D_s` with `m` rows and weakly decreasing widths.
///
/// A box `(row k, column c)` may be marked in at most one `D_i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MarkedFamily {
    diagrams: Vec<MarkedDiagram>,
}

impl MarkedFamily {
    pub fn new(diagrams: Vec<MarkedDiagram>) -> Self {
        MarkedFamily { diagrams }
    }

    pub fn diagrams(&self) -> &[MarkedDiagram] {
        &self.diagrams
    }

    /// Width of the first (widest) diagram.
    pub fn width(&self) -> usize {
        self.diagrams.first().map_or(0, |d| d.cols())
    }

    /// `d_i = |D_i|`.
    pub fn d(&self) -> Vec<usize> {
        self.diagrams.iter().map(|d| d.count()).collect()
    }

    pub fn total(&self) -> usize {
        self.diagrams.iter().map(|d| d.count()).sum()
    }

    /// Sorted marked rows of column `c` across the family (`I_c`).
    pub fn column_rows(&self, c: usize) -> Vec<usize> {
        let mut rows: Vec<usize> = self
            .diagrams
            .iter()
            .filter(|d| c <= d.cols())
            .filter_map(|d| d.mark(c))
            .collect();
        rows.sort_unstable();
        rows
    }

    /// `e_c`, the number of marks in column `c`.
    pub fn e(&self) -> Vec<usize> {
        (1..=self.width()).map(|c| self.column_rows(c).len()).collect()
    }

    /// `f_k`, the number of marks in row `k`.
    pub fn f(&self) -> Vec<usize> {
        let m = self.diagrams.first().map_or(0, |d| d.rows());
        (1..=m)
            .map(|k| {
                self.diagrams
                    .iter()
                    .map(|d| d.marks().iter().filter(|&&x| x == Some(k)).count())
                    .sum()
            })
            .collect()
    }

    /// Whether no box is marked in two different diagrams.
    pub fn respects_exclusion(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for d in &self.diagrams {
            for (c, mark) in d.marks().iter().enumerate() {
                if let Some(k) = mark {
                    if !seen.insert((c, *k)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Sign relating the product of marks ordered by (diagram, column, row)
    /// to the product ordered by (column, row, diagram).
    pub fn epsilon(&self) -> i32 {
        let mut marks: Vec<(usize, usize, usize)> = Vec::new();
        for (i, d) in self.diagrams.iter().enumerate() {
            for c in 1..=d.cols() {
                if let Some(k) = d.mark(c) {
                    marks.push((i, c, k));
                }
            }
        }
        // marks is in (i, s, k) order; rank them in (s, k, i) order
        let keys: Vec<(usize, usize, usize)> = marks.iter().map(|&(i, s, k)| (s, k, i)).collect();
        sort_sign(&keys)
    }
}

/// All families with the given widths obeying the per-column and
/// cross-diagram constraints, in lexicographic order.
pub fn enumerate_marked_families(widths: &[usize], m: usize) -> Vec<MarkedFamily> {
    assert!(
        widths.windows(2).all(|w| w[0] >= w[1]),
        "widths must be weakly decreasing"
    );
    fn go(
        widths: &[usize],
        m: usize,
        taken: &mut Vec<(usize, usize)>,
        cur: &mut Vec<MarkedDiagram>,
        out: &mut Vec<MarkedFamily>,
    ) {
        let i = cur.len();
        if i == widths.len() {
            out.push(MarkedFamily::new(cur.clone()));
            return;
        }
        for d in enumerate_marked_diagrams(m, widths[i]) {
            let boxes: Vec<(usize, usize)> = d
                .marks()
                .iter()
                .enumerate()
                .filter_map(|(c, k)| k.map(|k| (c, k)))
                .collect();
            if boxes.iter().any(|b| taken.contains(b)) {
                continue;
            }
            let before = taken.len();
            taken.extend_from_slice(&boxes);
            cur.push(d);
            go(widths, m, taken, cur, out);
            cur.pop();
            taken.truncate(before);
        }
    }
    let mut out = Vec::new();
    go(widths, m, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}
