//! Dense image buffer with unit-interval intensities.
//!
//! Pixels are stored row-major as `data[(y * width + x) * channels + c]`.
//! Intensities are always exact multiples of 1/255 so that the byte-level
//! stream format round-trips bit-exactly.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Image {
    pub height: usize,
    pub width: usize,
    pub channels: usize,
    pub data: Vec<f64>,
}

impl Image {
    pub fn zeros(height: usize, width: usize, channels: usize) -> Self {
        Image {
            height,
            width,
            channels,
            data: vec![0.0; height * width * channels],
        }
    }

    #[inline]
    pub fn idx(&self, x: usize, y: usize, c: usize) -> usize {
        (y * self.width + x) * self.channels + c
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize, c: usize) -> f64 {
        self.data[self.idx(x, y, c)]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, c: usize, v: f64) {
        let i = self.idx(x, y, c);
        self.data[i] = v;
    }

    /// Copy the full pixel at (x, y) from another image of equal depth.
    #[inline]
    pub fn copy_pixel_from(&mut self, x: usize, y: usize, src: &Image, sx: usize, sy: usize) {
        debug_assert_eq!(self.channels, src.channels);
        let di = self.idx(x, y, 0);
        let si = src.idx(sx, sy, 0);
        self.data[di..di + self.channels].copy_from_slice(&src.data[si..si + src.channels]);
    }

    /// Quantize to bytes (`round(v * 255)`).
    pub fn to_bytes(&self) -> Vec<u8> {
        self.data
            .iter()
            .map(|v| (v * 255.0).round().clamp(0.0, 255.0) as u8)
            .collect()
    }

    pub fn from_bytes(height: usize, width: usize, channels: usize, bytes: &[u8]) -> Option<Self> {
        if bytes.len() != height * width * channels {
            return None;
        }
        Some(Image {
            height,
            width,
            channels,
            data: bytes.iter().map(|b| *b as f64 / 255.0).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn byte_roundtrip_is_exact_for_palette_values() {
        let mut img = Image::zeros(4, 4, 3);
        img.set(1, 2, 0, 204.0 / 255.0);
        img.set(3, 0, 2, 17.0 / 255.0);
        let back = Image::from_bytes(4, 4, 3, &img.to_bytes()).unwrap();
        assert_eq!(img, back);
    }
}
