/*
 * Copyright 2026 The gablab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "cli/serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <bit>
#include <charconv>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace gablab::cli {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("float formatting failed");
  return {buf.data(), end};
}

std::string matrix_sha256(const CMatrix& m) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 unavailable");
  }
  auto feed = [&](double v) {
    std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    std::array<unsigned char, 8> le{};
    for (int i = 0; i < 8; ++i) le[static_cast<std::size_t>(i)] = static_cast<unsigned char>(bits >> (8 * i));
    EVP_DigestUpdate(ctx.get(), le.data(), le.size());
  };
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      feed(m(i, j).real());
      feed(m(i, j).imag());
    }
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &len);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

json to_json(const Rational& r) {
  return {{"numerator", r.num()}, {"denominator", r.den()}, {"value", r.to_double()}};
}

json to_json(const Elem& e) { return e.residues; }

json to_json(const Subgroup& s) {
  json gens = json::array();
  for (const Elem& e : s.generators()) gens.push_back(to_json(e));
  return {{"side", to_string(s.side())},
          {"order", s.order()},
          {"generators", gens},
          {"elements", std::vector<int>(s.elements().begin(), s.elements().end())}};
}

json to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const SpectralReport& r) {
  return {{"eigenvalues", r.eigenvalues},
          {"rank", r.rank},
          {"A", r.lower_bound},
          {"B", r.upper_bound},
          {"isFrame", r.is_frame},
          {"isRieszSequence", r.is_riesz_sequence},
          {"isTight", r.is_tight},
          {"tolerance", r.tolerance}};
}

json to_json(const DualityVerdict& v) {
  return {{"holds", v.holds},
          {"frame", to_json(v.frame)},
          {"adjointRiesz", to_json(v.adjoint)},
          {"lowerGap", v.lower_gap},
          {"upperGap", v.upper_gap},
          {"tolerance", v.tolerance}};
}

json to_json(const TightnessVerdict& v) {
  return {{"holds", v.holds},
          {"tight", v.tight},
          {"orthogonal", v.orthogonal},
          {"windowNormSquared", v.window_norm_sq},
          {"maxOffDiagonal", v.max_off_diagonal},
          {"boundDefect", v.bound_defect},
          {"frame", to_json(v.frame)},
          {"tolerance", v.tolerance}};
}

json to_json(const ExcessDeficit& e) {
  return {{"excess", e.excess}, {"deficit", e.deficit}, {"rank", e.rank}, {"atomCount", e.atom_count}};
}

json to_json(const CriticalRDualReport& r) {
  return {{"holds", r.holds},
          {"maxResidual", r.max_residual},
          {"bound", r.bound},
          {"windowNorm", r.window_norm},
          {"vectorCount", r.vector_count}};
}

namespace {

json labels_json(const std::vector<BasisLabel>& labels) {
  json out = json::array();
  for (const BasisLabel& l : labels) {
    if (l.filler) {
      out.push_back({{"filler", l.first}});
    } else {
      out.push_back({l.first, l.second});
    }
  }
  return out;
}

json matrix_field(const CMatrix& m, bool hashes_only) {
  json out = {{"rows", m.rows()}, {"cols", m.cols()}, {"sha256", matrix_sha256(m)}};
  if (!hashes_only) out["values"] = to_json(m);
  return out;
}

}  // namespace

json to_json(const OrthonormalBasis& b, bool hashes_only) {
  return {{"labels", labels_json(b.labels())}, {"vectors", matrix_field(b.vectors(), hashes_only)}};
}

json to_json(const RDualWitness& w, bool hashes_only) {
  return {{"maxResidual", w.max_residual},
          {"unitarityDefect", w.unitarity_defect},
          {"wGramDefect", w.w_gram_defect},
          {"tightBound", w.tight_bound},
          {"labelledCount", w.labelled_count},
          {"ambientDimension", w.ambient_dimension},
          {"complementDimension", w.complement_dimension},
          {"eBasis", to_json(w.e_basis, hashes_only)},
          {"hBasis", to_json(w.h_basis, hashes_only)},
          {"wSequence", matrix_field(w.w_sequence, hashes_only)},
          {"complementW", matrix_field(w.complement_w, hashes_only)},
          {"complementAdjoint", matrix_field(w.complement_adjoint, hashes_only)},
          {"unitary", matrix_field(w.unitary, hashes_only)}};
}

json to_json(const LatticeSize& s) {
  return {{"d", to_json(s.value)},
          {"groupOrder", s.group_order},
          {"timeOrder", s.time_order},
          {"freqOrder", s.freq_order}};
}

json to_json(const ThetaSweep& s) {
  return {{"holds", s.holds()},
          {"thetas", s.thetas},
          {"innerProducts", s.inner_products},
          {"psiValues", s.psi_values},
          {"identityDefects", s.identity_defects},
          {"energyDefects", s.energy_defects},
          {"dInverse", to_json(s.d_inverse)},
          {"psiLimit", s.psi_limit},
          {"limitGap", s.limit_gap()},
          {"rank", s.rank},
          {"dimension", s.dimension},
          {"identityHolds", s.identity_holds},
          {"energyHolds", s.energy_holds},
          {"innerBounded", s.inner_bounded},
          {"psiBounded", s.psi_bounded},
          {"monotone", s.monotone}};
}

json to_json(const CompletenessVerdict& v) {
  return {{"holds", v.holds},
          {"complete", v.complete},
          {"rank", v.rank},
          {"atomCount", v.atom_count},
          {"dimension", v.dimension},
          {"d", to_json(v.d)},
          {"countingWitness", v.counting_witness}};
}

void write_sweep_rows(std::ostream& os, const ThetaSweep& s) {
  const std::string bound = format_double(s.d_inverse.to_double());
  for (std::size_t i = 0; i < s.thetas.size(); ++i) {
    os << format_double(s.thetas[i]) << ',' << format_double(s.inner_products[i]) << ','
       << format_double(s.psi_values[i]) << ',' << bound << ','
       << format_double(s.identity_defects[i]) << '\n';
  }
}

}  // namespace gablab::cli
