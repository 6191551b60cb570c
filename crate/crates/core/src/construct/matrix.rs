use alloc::vec::Vec;

/// Dense row-major matrix of small symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl SymbolMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(rows * cols, data.len(), "data length must be rows * cols");
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u8]> {
        // chunks_exact panics on zero width
        let width = self.cols.max(1);
        self.data.chunks_exact(width).take(self.rows)
    }

    /// Stacks blocks with equal width.
    pub fn vstack(blocks: &[&SymbolMatrix]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(
            blocks.iter().all(|b| b.cols == cols),
            "vstack needs equal widths"
        );
        let mut data = Vec::with_capacity(blocks.iter().map(|b| b.data.len()).sum());
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Self {
            rows: data.len() / cols.max(1),
            cols,
            data,
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &SymbolMatrix) -> Self {
        assert_eq!(self.rows, other.rows, "hstack needs equal heights");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Self {
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn map(&self, f: impl Fn(u8) -> u8) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&s| f(s)).collect(),
        }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c]));
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn remove_rows(&self, drop: impl Fn(usize) -> bool) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        let mut rows = 0;
        for r in 0..self.rows {
            if !drop(r) {
                data.extend_from_slice(self.row(r));
                rows += 1;
            }
        }
        Self {
            rows,
            cols: self.cols,
            data,
        }
    }

    /// Column-major copy of the data.
    pub fn transposed_data(&self) -> Vec<u8> {
        let mut out = alloc::vec![0u8; self.data.len()];
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        out
    }
}
