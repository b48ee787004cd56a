#pragma once

namespace qf {

/// Output alphabet for factorizations and expressions. ASCII uses `.`, `*`
/// and `^k`; unicode uses ⊙, ∗ and superscript powers.
enum class Charset { Ascii, Unicode };

}  // namespace qf
