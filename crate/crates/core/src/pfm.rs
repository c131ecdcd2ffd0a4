//! PFM (portable float map) reading and writing.
//!
//! Grayscale `Pf` only. Header is three whitespace-delimited fields
//! (magic, `width height`, scale); a negative scale means little-endian
//! payload. Rows are stored bottom-up on disk and flipped to top-down
//! raster order in memory.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::grid::Grid2;
use crate::lf::DisparityMap;
use crate::scalar::Scalar;

/// Decoded PFM payload. `scale` keeps the sign read from the header.
#[derive(Debug, Clone)]
pub struct Pfm {
    pub data: Grid2<f32>,
    pub scale: f32,
}

fn is_pfm_space(b: u8) -> bool {
    matches!(b, b' ' | b'\t' | b'\r' | b'\n')
}

/// Reads one whitespace-delimited token starting at `pos`, returning the
/// token and the position one past its single terminating whitespace byte.
fn read_token(bytes: &[u8], mut pos: usize) -> Result<(&str, usize)> {
    while pos < bytes.len() && is_pfm_space(bytes[pos]) {
        pos += 1;
    }
    let start = pos;
    while pos < bytes.len() && !is_pfm_space(bytes[pos]) {
        pos += 1;
    }
    if start == pos {
        return Err(Error::PfmParse("unexpected end of header".into()));
    }
    let token = std::str::from_utf8(&bytes[start..pos])
        .map_err(|_| Error::PfmParse("non-ASCII header".into()))?;
    // Exactly one whitespace byte terminates the token.
    if pos < bytes.len() {
        pos += 1;
    }
    Ok((token, pos))
}

/// Parses a PFM byte stream into top-down raster order.
pub fn parse_pfm(bytes: &[u8]) -> Result<Pfm> {
    let (magic, pos) = read_token(bytes, 0)?;
    match magic {
        "Pf" => {}
        "PF" => {
            return Err(Error::PfmParse(
                "color PFM (PF) not supported, expected grayscale Pf".into(),
            ))
        }
        other => return Err(Error::PfmParse(format!("bad magic {other:?}"))),
    }
    let (w_tok, pos) = read_token(bytes, pos)?;
    let (h_tok, pos) = read_token(bytes, pos)?;
    let width: usize = w_tok
        .parse()
        .map_err(|_| Error::PfmParse(format!("non-numeric width {w_tok:?}")))?;
    let (scale_tok, pos) = read_token(bytes, pos)?;
    let height: usize = h_tok
        .parse()
        .map_err(|_| Error::PfmParse(format!("non-numeric height {h_tok:?}")))?;
    let scale: f32 = scale_tok
        .parse()
        .map_err(|_| Error::PfmParse(format!("non-numeric scale {scale_tok:?}")))?;
    if width == 0 || height == 0 {
        return Err(Error::PfmParse("zero-sized image".into()));
    }
    if scale == 0.0 {
        return Err(Error::PfmParse("zero scale".into()));
    }

    let expected = width * height * 4;
    let payload = &bytes[pos..];
    if payload.len() < expected {
        return Err(Error::PfmParse(format!(
            "truncated payload: need {expected} bytes, have {}",
            payload.len()
        )));
    }
    let little_endian = scale < 0.0;

    let mut data = vec![0.0f32; width * height];
    for file_row in 0..height {
        // Disk rows run bottom-up.
        let img_row = height - 1 - file_row;
        for col in 0..width {
            let off = (file_row * width + col) * 4;
            let raw: [u8; 4] = payload[off..off + 4].try_into().unwrap();
            let v = if little_endian {
                f32::from_le_bytes(raw)
            } else {
                f32::from_be_bytes(raw)
            };
            data[img_row * width + col] = v;
        }
    }
    Ok(Pfm {
        data: Grid2::from_vec(height, width, data),
        scale,
    })
}

/// Encodes a top-down raster grid as little-endian PFM bytes (scale -1.0).
pub fn encode_pfm(data: &Grid2<f32>) -> Vec<u8> {
    let (h, w) = data.shape();
    let mut out = Vec::with_capacity(32 + h * w * 4);
    out.extend_from_slice(format!("Pf\n{w} {h}\n-1.0\n").as_bytes());
    for file_row in 0..h {
        let img_row = h - 1 - file_row;
        for col in 0..w {
            out.extend_from_slice(&data.get(img_row, col).to_le_bytes());
        }
    }
    out
}

pub fn read_pfm_file(path: impl AsRef<Path>) -> Result<Pfm> {
    let bytes = fs::read(path)?;
    parse_pfm(&bytes)
}

/// Writes a disparity map as PFM. All entries must be finite.
pub fn write_pfm_file<T: Scalar>(path: impl AsRef<Path>, map: &DisparityMap<T>) -> Result<()> {
    let grid = map_to_f32(map)?;
    fs::write(path, encode_pfm(&grid))?;
    Ok(())
}

pub fn map_to_f32<T: Scalar>(map: &DisparityMap<T>) -> Result<Grid2<f32>> {
    if map.values().iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidInput(
            "refusing to write non-finite disparity".into(),
        ));
    }
    Ok(map.values().map(|v| v.to_f32().unwrap()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_little_endian_2x2() {
        let mut bytes = b"Pf\n2 2\n-1.0\n".to_vec();
        // Disk order is bottom row first.
        for v in [1.0f32, 2.0, 3.0, 4.0] {
            bytes.extend_from_slice(&v.to_le_bytes());
        }
        let pfm = parse_pfm(&bytes).unwrap();
        assert_eq!(pfm.data.shape(), (2, 2));
        assert_eq!(pfm.scale, -1.0);
        // Top-down raster: row 0 is the last disk row.
        assert_eq!(pfm.data.get(0, 0), 3.0);
        assert_eq!(pfm.data.get(0, 1), 4.0);
        assert_eq!(pfm.data.get(1, 0), 1.0);
        assert_eq!(pfm.data.get(1, 1), 2.0);
    }

    #[test]
    fn parses_big_endian_when_scale_positive() {
        let mut bytes = b"Pf\n1 1\n1.0\n".to_vec();
        bytes.extend_from_slice(&7.5f32.to_be_bytes());
        let pfm = parse_pfm(&bytes).unwrap();
        assert_eq!(pfm.data.get(0, 0), 7.5);
    }

    #[test]
    fn rejects_color_pfm() {
        let bytes = b"PF\n1 1\n-1.0\n\0\0\0\0\0\0\0\0\0\0\0\0".to_vec();
        assert!(matches!(parse_pfm(&bytes), Err(Error::PfmParse(_))));
    }

    #[test]
    fn rejects_bad_magic() {
        assert!(matches!(parse_pfm(b"P5\n1 1\n-1.0\n"), Err(Error::PfmParse(_))));
    }

    #[test]
    fn rejects_non_numeric_dims() {
        assert!(matches!(
            parse_pfm(b"Pf\nx 2\n-1.0\n"),
            Err(Error::PfmParse(_))
        ));
    }

    #[test]
    fn rejects_truncated_payload() {
        let mut bytes = b"Pf\n2 2\n-1.0\n".to_vec();
        bytes.extend_from_slice(&1.0f32.to_le_bytes());
        assert!(matches!(parse_pfm(&bytes), Err(Error::PfmParse(_))));
    }

    #[test]
    fn constant_zero_map_encodes_zero_floats() {
        let grid = Grid2::filled(3, 2, 0.0f32);
        let bytes = encode_pfm(&grid);
        let header_len = b"Pf\n2 3\n-1.0\n".len();
        assert!(bytes[header_len..].iter().all(|&b| b == 0));
    }

    #[test]
    fn write_rejects_nan() {
        let mut g = Grid2::filled(2, 2, 0.0f64);
        g.set(1, 1, f64::NAN);
        let map = DisparityMap::with_validity(g, {
            let mut m = Grid2::filled(2, 2, true);
            m.set(1, 1, false);
            m
        })
        .unwrap();
        assert!(map_to_f32(&map).is_err());
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(
            h in 1usize..8,
            w in 1usize..8,
            seed in any::<u64>(),
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let grid = Grid2::from_fn(h, w, |_, _| {
                // Include negatives, zeros, and wide magnitudes.
                let v: f32 = rng.gen_range(-1e6..1e6);
                if rng.gen_bool(0.1) { 0.0 } else { v }
            });
            let bytes = encode_pfm(&grid);
            let back = parse_pfm(&bytes).unwrap();
            prop_assert_eq!(
                grid.data().iter().map(|v| v.to_bits()).collect::<Vec<_>>(),
                back.data.data().iter().map(|v| v.to_bits()).collect::<Vec<_>>()
            );
        }
    }
}
