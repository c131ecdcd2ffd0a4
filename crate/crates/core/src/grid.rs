//! Dense row-major containers for 2D fields and 3D volumes.

/// 2D array stored row-major, indexed `(row, col)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid2<T> {
    height: usize,
    width: usize,
    data: Vec<T>,
}

impl<T: Copy> Grid2<T> {
    pub fn filled(height: usize, width: usize, value: T) -> Self {
        Self {
            height,
            width,
            data: vec![value; height * width],
        }
    }

    pub fn from_vec(height: usize, width: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), height * width, "grid data length");
        Self {
            height,
            width,
            data,
        }
    }

    /// Builds a grid by evaluating `f(row, col)` at every pixel.
    pub fn from_fn(height: usize, width: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(height * width);
        for r in 0..height {
            for c in 0..width {
                data.push(f(r, c));
            }
        }
        Self {
            height,
            width,
            data,
        }
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.height, self.width)
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> T {
        debug_assert!(row < self.height && col < self.width);
        self.data[row * self.width + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: T) {
        debug_assert!(row < self.height && col < self.width);
        self.data[row * self.width + col] = value;
    }

    /// Clamps the coordinate to the nearest in-bounds pixel before reading.
    #[inline]
    pub fn get_clamped(&self, row: isize, col: isize) -> T {
        let r = row.clamp(0, self.height as isize - 1) as usize;
        let c = col.clamp(0, self.width as isize - 1) as usize;
        self.get(r, c)
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.data.iter()
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Grid2<U> {
        Grid2 {
            height: self.height,
            width: self.width,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Pixel coordinates in raster order.
    pub fn coords(&self) -> impl Iterator<Item = (usize, usize)> {
        let w = self.width;
        let h = self.height;
        (0..h).flat_map(move |r| (0..w).map(move |c| (r, c)))
    }
}

/// 3D array stored as D slices of row-major 2D data, indexed `(slice, row, col)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Volume3<T> {
    depth: usize,
    height: usize,
    width: usize,
    data: Vec<T>,
}

impl<T: Copy> Volume3<T> {
    pub fn filled(depth: usize, height: usize, width: usize, value: T) -> Self {
        Self {
            depth,
            height,
            width,
            data: vec![value; depth * height * width],
        }
    }

    pub fn from_vec(depth: usize, height: usize, width: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), depth * height * width, "volume data length");
        Self {
            depth,
            height,
            width,
            data,
        }
    }

    #[inline]
    pub fn depth(&self) -> usize {
        self.depth
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.height
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.depth, self.height, self.width)
    }

    #[inline]
    fn index(&self, slice: usize, row: usize, col: usize) -> usize {
        debug_assert!(slice < self.depth && row < self.height && col < self.width);
        (slice * self.height + row) * self.width + col
    }

    #[inline]
    pub fn get(&self, slice: usize, row: usize, col: usize) -> T {
        self.data[self.index(slice, row, col)]
    }

    #[inline]
    pub fn set(&mut self, slice: usize, row: usize, col: usize, value: T) {
        let i = self.index(slice, row, col);
        self.data[i] = value;
    }

    pub fn slice(&self, slice: usize) -> &[T] {
        let n = self.height * self.width;
        &self.data[slice * n..(slice + 1) * n]
    }

    pub fn slice_mut(&mut self, slice: usize) -> &mut [T] {
        let n = self.height * self.width;
        &mut self.data[slice * n..(slice + 1) * n]
    }

    /// Mutable views of all slices at once, for per-slice parallel fills.
    pub fn slices_mut(&mut self) -> Vec<&mut [T]> {
        let n = self.height * self.width;
        self.data.chunks_mut(n).collect()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [T] {
        &mut self.data
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Volume3<U> {
        Volume3 {
            depth: self.depth,
            height: self.height,
            width: self.width,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }
}
