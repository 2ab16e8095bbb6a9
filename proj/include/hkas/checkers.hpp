#pragma once

#include <cstddef>

#include "hkas/scheme.hpp"

namespace hkas {

/// Largest coalition space (in bits: |F_u| for KI, |F_u| + |C_u| for SKI)
/// that exhaustive mode or witness minimization will enumerate.
inline constexpr std::size_t kMaxCoalitionBits = 20;

/// K_u is a function of S_v for every v and every u in A_v.
/// One witness per failing (v, u): class u, secrets {v}.
CheckReport check_correctness(const Scheme& s);

/// KI: K_u independent of S_X for every X in F_u.
///
/// Maximal mode decides with X = F_u alone. Exhaustive mode decides from
/// every subset and throws CoalitionSpaceTooLarge beyond kMaxCoalitionBits.
/// Either way, each failing class gets the smallest failing coalition as its
/// witness (fewest classes first, then lexicographic by label).
CheckReport check_ki(const Scheme& s, bool exhaustive = false);

/// SKI: K_u independent of (S_X, K_Y) for X in F_u and Y in C_u.
CheckReport check_ski(const Scheme& s, bool exhaustive = false);

/// The keys {K_u} are mutually independent. A failure is witnessed by a
/// smallest dependent set of keys T: class = min(T), keys = T minus class.
CheckReport check_key_independence(const Scheme& s);

}  // namespace hkas
