#pragma once

#include <memory>
#include <string_view>

#include "qrep/representation.hpp"

namespace qrep::fixtures {

// The quiver Q (vertices 1,2,3 -> 4 -> 5 -> 6,7,8) and three representations
// on it, with 0/1 entries so they make sense over every field. The texts are
// the files under data/, embedded at build time.

std::string_view quiver_text();
std::string_view x_alpha_text();
std::string_view x_beta1_text();
std::string_view x_gamma1_text();

std::shared_ptr<const Quiver> quiver();

/// The representations are parsed over Q and then moved to `field`.
Representation x_alpha(Field field);
Representation x_beta1(Field field);
Representation x_gamma1(Field field);

/// Letters of s8 s7 s5 s4 s8 s7 s5 s8 s7 s5 s6 s4 s5 s4 s1 s2 s3 (0-based).
ReflectionWord alpha_word();
/// The vertex the word is applied to (vertex 4, index 3).
inline constexpr std::size_t kAlphaWordSeed = 3;

}  // namespace qrep::fixtures
