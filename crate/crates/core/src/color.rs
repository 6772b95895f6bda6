use std::fmt;

use serde::{Deserialize, Serialize};

/// One of the three tree colors of a Schnyder wood.
///
/// Arithmetic is cyclic: `Red.next() == Green`, `Red.prev() == Blue`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    /// Zero-based index (red = 0).
    pub fn index(self) -> usize {
        match self {
            Color::Red => 0,
            Color::Green => 1,
            Color::Blue => 2,
        }
    }

    pub fn from_index(i: usize) -> Color {
        Color::ALL[i % 3]
    }

    /// One-based number used in text formats (red = 1).
    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub fn from_number(k: u8) -> Option<Color> {
        match k {
            1 => Some(Color::Red),
            2 => Some(Color::Green),
            3 => Some(Color::Blue),
            _ => None,
        }
    }

    pub fn next(self) -> Color {
        Color::from_index(self.index() + 1)
    }

    pub fn prev(self) -> Color {
        Color::from_index(self.index() + 2)
    }

    pub fn name(self) -> &'static str {
        match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_arithmetic() {
        for c in Color::ALL {
            assert_eq!(c.next().prev(), c);
            assert_eq!(c.next().next().next(), c);
            assert_ne!(c.next(), c.prev());
        }
        assert_eq!(Color::Blue.next(), Color::Red);
        assert_eq!(Color::Red.prev(), Color::Blue);
    }

    #[test]
    fn numbers_round_trip() {
        for c in Color::ALL {
            assert_eq!(Color::from_number(c.number()), Some(c));
        }
        assert_eq!(Color::from_number(0), None);
        assert_eq!(Color::from_number(4), None);
    }
}
