//! Code 128 subset B encoder.

use super::ExportError;

pub const START_B: u8 = 104;
pub const STOP: u8 = 106;

/// Bar/space widths of each symbol value, bar first. 106 (stop) has a
/// seventh, final 2-module bar.
const PATTERNS: [&str; 107] = [
    "212222", "222122", "222221", "121223", "121322", "131222", "122213", "122312", "132212", "221213", "221312",
    "231212", "112232", "122132", "122231", "113222", "123122", "123221", "223211", "221132", "221231", "213212",
    "223112", "312131", "311222", "321122", "321221", "312212", "322112", "322211", "212123", "212321", "232121",
    "111323", "131123", "131321", "112313", "132113", "132311", "211313", "231113", "231311", "112133", "112331",
    "132131", "113123", "113321", "133121", "313121", "211331", "231131", "213113", "213311", "213131", "311123",
    "311321", "331121", "312113", "312311", "332111", "314111", "221411", "431111", "111224", "111422", "121124",
    "121421", "141122", "141221", "112214", "112412", "122114", "122411", "142112", "142211", "241211", "221114",
    "413111", "241112", "134111", "111242", "121142", "121241", "114212", "124112", "124211", "411212", "421112",
    "421211", "212141", "214121", "412121", "111143", "111341", "131141", "114113", "114311", "411113", "411311",
    "113141", "114131", "311141", "411131", "211412", "211214", "211232", "2331112",
];

/// An encoded Code 128 symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Code128 {
    pub text: String,
    /// Start B followed by one value per character.
    pub values: Vec<u8>,
    pub checksum: u8,
}

impl Code128 {
    /// Every symbol in print order: start, data, checksum, stop.
    pub fn symbols(&self) -> Vec<u8> {
        let mut s = self.values.clone();
        s.push(self.checksum);
        s.push(STOP);
        s
    }

    /// Alternating bar and space widths in modules, starting with a bar.
    pub fn module_widths(&self) -> Vec<u8> {
        self.symbols().into_iter().flat_map(|v| PATTERNS[usize::from(v)].bytes().map(|b| b - b'0')).collect()
    }

    /// `(start module, width in modules)` of every bar.
    pub fn bars(&self) -> Vec<(u32, u32)> {
        let mut pos = 0u32;
        let mut out = Vec::new();
        for (i, w) in self.module_widths().into_iter().enumerate() {
            if i % 2 == 0 {
                out.push((pos, u32::from(w)));
            }
            pos += u32::from(w);
        }
        out
    }

    pub fn total_modules(&self) -> u32 {
        self.module_widths().iter().map(|&w| u32::from(w)).sum()
    }
}

/// Encodes printable ASCII (space through `~`) in subset B.
///
/// The checksum is `(104 + sum(i * value_i)) mod 103` over 1-based positions.
pub fn encode_code128(text: &str) -> Result<Code128, ExportError> {
    let mut values = vec![START_B];
    for (index, ch) in text.chars().enumerate() {
        if !(' '..='~').contains(&ch) {
            return Err(ExportError::UnencodableCharacter { ch, index });
        }
        values.push(ch as u8 - 32);
    }
    let weighted: u32 = values.iter().enumerate().map(|(i, &v)| i.max(1) as u32 * u32::from(v)).sum();
    let checksum = (weighted % 103) as u8;
    Ok(Code128 { text: text.to_string(), values, checksum })
}
