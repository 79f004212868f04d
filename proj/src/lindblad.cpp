// Copyright 2026 The nhgap Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nhgap/lindblad.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "nhgap/errors.hpp"
#include "nhgap/linalg.hpp"

namespace nhgap {

namespace {

int letter_index(char c) {
  switch (c) {
    case 'I': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
  }
  throw SchemaError(std::string("invalid Pauli letter '") + c + "'");
}

constexpr char kLetters[] = "IXYZ";

// sigma_a sigma_b = i^k sigma_c; tables indexed [a][b].
constexpr int kProdLetter[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};
constexpr int kProdPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

// Multiplies two Pauli words letterwise; returns the phase exponent.
int word_product(const std::string& a, const std::string& b, std::string* out) {
  int phase = 0;
  out->resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    const int ia = letter_index(a[i]);
    const int ib = letter_index(b[i]);
    (*out)[i] = kLetters[kProdLetter[ia][ib]];
    phase = (phase + kProdPhase[ia][ib]) % 4;
  }
  return phase;
}

int count_y(const std::string& w) {
  int c = 0;
  for (char ch : w) c += ch == 'Y';
  return c;
}

Complex quarter_phase(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void validate_term(const LindbladSpec& spec, double alpha, const PauliTerm& t) {
  if (!(alpha > 0.0)) throw SchemaError("term weight must be positive");
  if (static_cast<long>(t.word.size()) != spec.n) {
    throw SchemaError("Pauli word length must equal qubit count");
  }
  for (char c : t.word) letter_index(c);
  if (t.phase < 0 || t.phase > 3) throw SchemaError("phase exponent out of range");
}

// Scalar carried by one ingested LCU entry: its quarter phase. The
// `coefficient` field is reserved for derived terms and must stay 1 here.
Complex term_scalar(const PauliTerm& t) { return quarter_phase(t.phase); }

using RawTerms = std::map<std::string, Complex>;

void add_raw(RawTerms& acc, const std::string& word, Complex c) {
  acc[word] += c;
}

}  // namespace

double lcu_normalization(const LindbladSpec& spec) {
  double c = 0.0;
  for (const auto& [alpha, term] : spec.hamiltonian) c += alpha;
  for (const auto& channel : spec.dissipators) {
    double s = 0.0;
    for (const auto& [alpha, term] : channel) s += std::sqrt(alpha);
    c += s * s;
  }
  return c;
}

VectorizedLiouvillian vectorize(const LindbladSpec& spec) {
  if (spec.n <= 0) throw SchemaError("qubit count must be positive");
  for (const auto& [alpha, t] : spec.hamiltonian) validate_term(spec, alpha, t);
  for (const auto& ch : spec.dissipators) {
    for (const auto& [alpha, t] : ch) validate_term(spec, alpha, t);
  }
  const std::string id(spec.n, 'I');
  RawTerms acc;

  // Coherent part: -i H (x) I + i I (x) H^T.
  for (const auto& [alpha, t] : spec.hamiltonian) {
    const Complex p = term_scalar(t);
    add_raw(acc, t.word + id, Complex(0.0, -1.0) * alpha * p);
    const double ty = count_y(t.word) % 2 == 0 ? 1.0 : -1.0;
    add_raw(acc, id + t.word, Complex(0.0, 1.0) * alpha * p * ty);
  }
  // Dissipators: L (x) L* - 1/2 (L^dag L) (x) I - 1/2 I (x) (L^dag L)^T.
  for (const auto& channel : spec.dissipators) {
    for (const auto& [aj, tj] : channel) {
      for (const auto& [ak, tk] : channel) {
        const double w = std::sqrt(aj * ak);
        const Complex pj = term_scalar(tj);
        const Complex pk = term_scalar(tk);
        // V_j rho V_k^dag -> (V_j (x) (conj(p_k) V_k)^T) vec(rho).
        const double ky = count_y(tk.word) % 2 == 0 ? 1.0 : -1.0;
        add_raw(acc, tj.word + tk.word, w * pj * std::conj(pk) * ky);
        // -(1/2) V_k^dag V_j on the left and its transpose on the right.
        std::string prod;
        const int m = word_product(tk.word, tj.word, &prod);
        const Complex scalar = std::conj(pk) * pj * quarter_phase(m);
        add_raw(acc, prod + id, -0.5 * w * scalar);
        const double py = count_y(prod) % 2 == 0 ? 1.0 : -1.0;
        add_raw(acc, id + prod, -0.5 * w * scalar * py);
      }
    }
  }

  VectorizedLiouvillian out;
  out.n = spec.n;
  for (const auto& [word, c] : acc) {
    auto push = [&](double beta, int phase) {
      if (beta <= 1e-14) return;
      PauliTerm t;
      t.word = word;
      t.phase = phase;
      out.terms.emplace_back(beta, t);
      out.c_tilde += beta;
    };
    push(std::abs(c.real()), c.real() >= 0.0 ? 0 : 2);
    push(std::abs(c.imag()), c.imag() >= 0.0 ? 1 : 3);
  }

  if (spec.n <= 6) {
    const long dim = 1L << (2 * spec.n);
    CMatrix dense = CMatrix::Zero(dim, dim);
    for (const auto& [beta, t] : out.terms) {
      dense += beta * dense_pauli(t);
    }
    out.dense = std::move(dense);
  }
  return out;
}

CMatrix dense_pauli(const PauliTerm& t) {
  static const CMatrix kI = (CMatrix(2, 2) << 1, 0, 0, 1).finished();
  static const CMatrix kX = (CMatrix(2, 2) << 0, 1, 1, 0).finished();
  static const CMatrix kY =
      (CMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const CMatrix kZ = (CMatrix(2, 2) << 1, 0, 0, -1).finished();
  CMatrix out = CMatrix::Identity(1, 1);
  for (char c : t.word) {
    const CMatrix* m = nullptr;
    switch (c) {
      case 'I': m = &kI; break;
      case 'X': m = &kX; break;
      case 'Y': m = &kY; break;
      case 'Z': m = &kZ; break;
      default: throw SchemaError("invalid Pauli letter");
    }
    // Keep the first letter as the most significant factor so that word
    // concatenation matches A (x) B on the doubled register.
    CMatrix next(out.rows() * 2, out.cols() * 2);
    for (long r = 0; r < out.rows(); ++r) {
      for (long cc = 0; cc < out.cols(); ++cc) {
        next.block(r * 2, cc * 2, 2, 2) = out(r, cc) * (*m);
      }
    }
    out = std::move(next);
  }
  return t.coefficient * quarter_phase(t.phase) * out;
}

namespace {

CMatrix dense_sum(const std::vector<std::pair<double, PauliTerm>>& terms,
                  bool sqrt_weights, long n) {
  const long dim = 1L << n;
  CMatrix out = CMatrix::Zero(dim, dim);
  for (const auto& [alpha, t] : terms) {
    out += (sqrt_weights ? std::sqrt(alpha) : alpha) * dense_pauli(t);
  }
  return out;
}

}  // namespace

CMatrix apply_lindblad(const LindbladSpec& spec, const CMatrix& rho) {
  if (spec.n > 6) throw DimensionTooLarge("dense superoperator limited to 6 qubits");
  const long dim = 1L << spec.n;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw InvalidMatrix("density matrix dimension mismatch");
  }
  const CMatrix h = dense_sum(spec.hamiltonian, false, spec.n);
  CMatrix out = Complex(0.0, -1.0) * (h * rho - rho * h);
  for (const auto& channel : spec.dissipators) {
    const CMatrix l = dense_sum(channel, true, spec.n);
    const CMatrix ldl = l.adjoint() * l;
    out += l * rho * l.adjoint() - 0.5 * (ldl * rho + rho * ldl);
  }
  return out;
}

LcuCostRecord modeled_block_encoding_cost(const VectorizedLiouvillian& v) {
  LcuCostRecord rec;
  rec.term_count = static_cast<long>(v.terms.size());
  rec.qubits = 2 * v.n;
  rec.c_be = static_cast<double>(rec.term_count) * static_cast<double>(rec.qubits);
  return rec;
}

GapReport liouvillian_gap(const LindbladSpec& spec, double eps,
                          const FqedConfig& cfg,
                          std::optional<double> k_bound,
                          std::optional<long> m_max) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  bool dissipative = false;
  for (const auto& ch : spec.dissipators) {
    if (!ch.empty()) dissipative = true;
  }
  if (!dissipative) {
    throw PromiseViolation(
        "purely coherent generator: spectrum sits on the imaginary axis");
  }
  VectorizedLiouvillian v = vectorize(spec);
  if (!v.dense) throw DimensionTooLarge("gap estimation needs the dense generator");
  if (v.c_tilde <= 0.0) throw InvalidArgument("generator is identically zero");
  // Rotate so the spectrum (Re <= 0) moves to the upper half plane.
  CMatrix b = Complex(0.0, -1.0) / v.c_tilde * (*v.dense);
  double k = k_bound.value_or(0.0);
  if (!k_bound) k = jordan_condition_estimate(b);
  SpectralOperand op(std::move(b), std::max(1.0, k), m_max.value_or(1), true);
  op.set_provenance(BlockEncodingProvenance{
      static_cast<long>(v.terms.size()), 2 * v.n});

  const double eps_scaled = std::min(eps / v.c_tilde, 0.5);
  LineGapOptions opts;
  opts.exclusion = eps_scaled / 2.0;
  GapReport rep = line_gap(op, eps_scaled, cfg, opts);

  // Map back to generator units: lambda = i * c_tilde * b.
  rep.estimate = Complex(0.0, 1.0) * rep.estimate * v.c_tilde;
  rep.bracket = GuessRegion::interval(rep.bracket.lo * v.c_tilde,
                                      rep.bracket.hi * v.c_tilde);
  return rep;
}

namespace {

PauliTerm parse_term(const nlohmann::json& j, long n, double* alpha) {
  if (!j.is_object()) throw SchemaError("term must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "coeff" && key != "pauli" && key != "phase") {
      throw SchemaError("unknown key in term: '" + key + "'");
    }
  }
  if (!j.contains("coeff") || !j["coeff"].is_number()) {
    throw SchemaError("term needs a numeric 'coeff'");
  }
  if (!j.contains("pauli") || !j["pauli"].is_string()) {
    throw SchemaError("term needs a string 'pauli'");
  }
  *alpha = j["coeff"].get<double>();
  PauliTerm t;
  t.word = j["pauli"].get<std::string>();
  if (static_cast<long>(t.word.size()) != n) {
    throw SchemaError("pauli word length must equal n");
  }
  for (char c : t.word) letter_index(c);
  std::string phase = "+1";
  if (j.contains("phase")) {
    if (!j["phase"].is_string()) throw SchemaError("phase must be a string");
    phase = j["phase"].get<std::string>();
  }
  if (phase == "+1") t.phase = 0;
  else if (phase == "+i") t.phase = 1;
  else if (phase == "-1") t.phase = 2;
  else if (phase == "-i") t.phase = 3;
  else throw SchemaError("phase must be one of +1, -1, +i, -i");
  return t;
}

}  // namespace

LindbladSpec parse_lindblad_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "hamiltonian" && key != "dissipators") {
      throw SchemaError("unknown key in spec: '" + key + "'");
    }
  }
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw SchemaError("spec needs an integer 'n'");
  }
  LindbladSpec spec;
  spec.n = j["n"].get<long>();
  if (spec.n <= 0) throw SchemaError("n must be positive");
  if (!j.contains("hamiltonian") || !j.contains("dissipators")) {
    throw SchemaError("spec needs 'hamiltonian' and 'dissipators' arrays");
  }
  {
    if (!j["hamiltonian"].is_array()) throw SchemaError("hamiltonian must be an array");
    for (const auto& jt : j["hamiltonian"]) {
      double alpha = 0.0;
      PauliTerm t = parse_term(jt, spec.n, &alpha);
      if (!(alpha > 0.0)) throw SchemaError("coeff must be positive");
      spec.hamiltonian.emplace_back(alpha, t);
    }
  }
  {
    if (!j["dissipators"].is_array()) throw SchemaError("dissipators must be an array");
    for (const auto& jc : j["dissipators"]) {
      if (!jc.is_array()) throw SchemaError("each dissipator must be an array of terms");
      std::vector<std::pair<double, PauliTerm>> channel;
      for (const auto& jt : jc) {
        double alpha = 0.0;
        PauliTerm t = parse_term(jt, spec.n, &alpha);
        if (!(alpha > 0.0)) throw SchemaError("coeff must be positive");
        channel.emplace_back(alpha, t);
      }
      spec.dissipators.push_back(std::move(channel));
    }
  }
  return spec;
}

LindbladSpec read_lindblad_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_lindblad_spec(buf.str());
}

}  // namespace nhgap
