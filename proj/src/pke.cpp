#include "hardlearn/pke.hpp"

#include <cmath>
#include <istream>
#include <sstream>

namespace hardlearn {

namespace {

std::vector<std::uint64_t> parse_csv_u64(const std::string& line) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    out.push_back(std::stoull(tok));
  }
  return out;
}

void write_csv_u64(std::ostringstream& out, const std::vector<std::uint64_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << "\n";
}

std::string expect_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error::io(std::string("key file: missing ") + what);
  }
  return line;
}

}  // namespace

void validate_pke_params(const PkeParams& p) {
  if (p.d < 1) throw Error::domain("PkeParams: d must be >= 1");
  if (p.q < 2) throw Error::domain("PkeParams: q must be >= 2");
  if (p.m < 1) throw Error::domain("PkeParams: m must be >= 1");
}

PkeAdvisory check_pke_params(const PkeParams& p, double eps) {
  validate_pke_params(p);
  PkeAdvisory adv;
  adv.required_m = (1.0 + eps) * (static_cast<double>(p.d) + 1.0) *
                   std::log2(static_cast<double>(p.q));
  adv.satisfied = static_cast<double>(p.m) >= adv.required_m;
  adv.noise_budget = p.chi.sigma * std::sqrt(static_cast<double>(p.m) / 2.0);
  adv.quarter_q = static_cast<double>(p.q) / 4.0;
  return adv;
}

KeyPair pke_keygen(const PkeParams& params, Philox4x32& rng, bool record_debug_e) {
  validate_pke_params(params);
  KeyPair kp;
  kp.params = params;
  kp.s.resize(params.d);
  for (auto& v : kp.s) {
    v = rng.uniform_below(params.q);
  }
  kp.A.resize(static_cast<std::size_t>(params.m) * params.d);
  for (auto& v : kp.A) {
    v = rng.uniform_below(params.q);
  }
  GaussianSampler chi(params.chi);
  kp.b.resize(params.m);
  std::vector<std::int64_t> debug;
  if (record_debug_e) {
    debug.reserve(params.m);
  }
  for (std::uint32_t i = 0; i < params.m; ++i) {
    std::uint64_t dot = 0;
    const std::uint64_t* row = &kp.A[static_cast<std::size_t>(i) * params.d];
    for (std::uint32_t j = 0; j < params.d; ++j) {
      dot = add_mod(dot, mul_mod(row[j], kp.s[j], params.q), params.q);
    }
    const std::int64_t e = chi.sample(rng);
    std::uint64_t noise;
    if (e >= 0) {
      noise = static_cast<std::uint64_t>(e) % params.q;
    } else {
      const std::uint64_t mm = static_cast<std::uint64_t>(-e) % params.q;
      noise = mm == 0 ? 0 : params.q - mm;
    }
    kp.b[i] = add_mod(dot, noise, params.q);
    if (record_debug_e) {
      debug.push_back(e);
    }
  }
  if (record_debug_e) {
    kp.debug_e = std::move(debug);
  }
  return kp;
}

std::vector<std::uint8_t> draw_subset(std::uint32_t m, Philox4x32& rng) {
  std::vector<std::uint8_t> subset(m);
  for (auto& v : subset) {
    v = static_cast<std::uint8_t>(rng.coin());
  }
  return subset;
}

Ciphertext pke_encrypt_with_subset(const KeyPair& pub, int bit,
                                   const std::vector<std::uint8_t>& subset) {
  if (bit != 0 && bit != 1) {
    throw Error::domain("pke_encrypt: plaintext must be a bit");
  }
  if (subset.size() != pub.params.m) {
    throw Error::domain("pke_encrypt: subset indicator has wrong length");
  }
  const PkeParams& p = pub.params;
  Ciphertext ct;
  ct.a.assign(p.d, 0);
  std::uint64_t csum = 0;
  for (std::uint32_t i = 0; i < p.m; ++i) {
    if (!subset[i]) continue;
    const std::uint64_t* row = &pub.A[static_cast<std::size_t>(i) * p.d];
    for (std::uint32_t j = 0; j < p.d; ++j) {
      ct.a[j] = add_mod(ct.a[j], row[j], p.q);
    }
    csum = add_mod(csum, pub.b[i], p.q);
  }
  ct.c = add_mod(csum, static_cast<std::uint64_t>(bit) * (p.q / 2), p.q);
  return ct;
}

Ciphertext pke_encrypt(const KeyPair& pub, int bit, Philox4x32& rng) {
  return pke_encrypt_with_subset(pub, bit, draw_subset(pub.params.m, rng));
}

int pke_decrypt(const KeyPair& priv, const Ciphertext& ct, DecryptRule rule) {
  const PkeParams& p = priv.params;
  if (ct.a.size() != p.d) {
    throw Error::domain("pke_decrypt: ciphertext dimension mismatch");
  }
  std::uint64_t dot = 0;
  for (std::uint32_t j = 0; j < p.d; ++j) {
    dot = add_mod(dot, mul_mod(ct.a[j], priv.s[j], p.q), p.q);
  }
  const std::uint64_t v = sub_mod(ct.c, dot, p.q);
  const std::uint64_t quarter = p.q / 4;
  if (rule == DecryptRule::Literal) {
    return v <= quarter ? 0 : 1;
  }
  return (v <= quarter || v >= p.q - quarter) ? 0 : 1;
}

DecryptionErrorEstimate estimate_decryption_error(const PkeParams& params, std::uint64_t trials,
                                                  const RngSeed& seed) {
  if (trials < 1) {
    throw Error::domain("estimate_decryption_error: trials must be >= 1");
  }
  std::uint64_t err_nearest = 0, err_literal = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Philox4x32 rng(derive_stream(seed, t));
    KeyPair kp = pke_keygen(params, rng);
    const int bit = rng.coin();
    Ciphertext ct = pke_encrypt(kp, bit, rng);
    err_nearest += pke_decrypt(kp, ct, DecryptRule::NearestCenter) != bit;
    err_literal += pke_decrypt(kp, ct, DecryptRule::Literal) != bit;
  }
  DecryptionErrorEstimate est;
  est.trials = trials;
  est.rate_nearest = static_cast<double>(err_nearest) / static_cast<double>(trials);
  est.rate_literal = static_cast<double>(err_literal) / static_cast<double>(trials);
  std::tie(est.ci_nearest_low, est.ci_nearest_high) = clopper_pearson_95(err_nearest, trials);
  std::tie(est.ci_literal_low, est.ci_literal_high) = clopper_pearson_95(err_literal, trials);
  return est;
}

std::string serialize_private_key(const KeyPair& kp) {
  std::ostringstream out;
  out << "d=" << kp.params.d << " q=" << kp.params.q << " m=" << kp.params.m << "\n";
  write_csv_u64(out, kp.s);
  return out.str();
}

std::string serialize_public_key(const KeyPair& kp) {
  std::ostringstream out;
  out << "d=" << kp.params.d << " q=" << kp.params.q << " m=" << kp.params.m << "\n";
  for (std::uint32_t i = 0; i < kp.params.m; ++i) {
    std::vector<std::uint64_t> row(kp.A.begin() + static_cast<std::size_t>(i) * kp.params.d,
                                   kp.A.begin() + static_cast<std::size_t>(i + 1) * kp.params.d);
    write_csv_u64(out, row);
  }
  write_csv_u64(out, kp.b);
  return out.str();
}

KeyPair parse_public_key(std::istream& pub) {
  KeyPair kp;
  const std::string header = expect_line(pub, "header");
  if (std::sscanf(header.c_str(), "d=%u q=%lu m=%u", &kp.params.d, &kp.params.q,
                  &kp.params.m) != 3) {
    throw Error::io("public key: malformed header '" + header + "'");
  }
  validate_pke_params(kp.params);
  kp.A.reserve(static_cast<std::size_t>(kp.params.m) * kp.params.d);
  for (std::uint32_t i = 0; i < kp.params.m; ++i) {
    const auto row = parse_csv_u64(expect_line(pub, "matrix row"));
    if (row.size() != kp.params.d) {
      throw Error::io("public key: matrix row has wrong length");
    }
    kp.A.insert(kp.A.end(), row.begin(), row.end());
  }
  kp.b = parse_csv_u64(expect_line(pub, "b vector"));
  if (kp.b.size() != kp.params.m) {
    throw Error::io("public key: b has wrong length");
  }
  return kp;
}

KeyPair parse_private_key(std::istream& priv) {
  KeyPair kp;
  const std::string header = expect_line(priv, "header");
  if (std::sscanf(header.c_str(), "d=%u q=%lu m=%u", &kp.params.d, &kp.params.q,
                  &kp.params.m) != 3) {
    throw Error::io("private key: malformed header '" + header + "'");
  }
  validate_pke_params(kp.params);
  kp.s = parse_csv_u64(expect_line(priv, "secret"));
  if (kp.s.size() != kp.params.d) {
    throw Error::io("private key: secret has wrong length");
  }
  return kp;
}

KeyPair parse_key_files(std::istream& priv, std::istream& pub) {
  KeyPair kp = parse_public_key(pub);
  const std::string header = expect_line(priv, "header");
  PkeParams check;
  if (std::sscanf(header.c_str(), "d=%u q=%lu m=%u", &check.d, &check.q, &check.m) != 3) {
    throw Error::io("private key: malformed header '" + header + "'");
  }
  if (check.d != kp.params.d || check.q != kp.params.q || check.m != kp.params.m) {
    throw Error::domain("key files disagree on parameters");
  }
  kp.s = parse_csv_u64(expect_line(priv, "secret"));
  if (kp.s.size() != kp.params.d) {
    throw Error::io("private key: secret has wrong length");
  }
  return kp;
}

std::string serialize_ciphertext(const Ciphertext& ct) {
  std::ostringstream out;
  std::vector<std::uint64_t> all = ct.a;
  all.push_back(ct.c);
  write_csv_u64(out, all);
  return out.str();
}

Ciphertext parse_ciphertext(std::istream& in) {
  const auto vals = parse_csv_u64(expect_line(in, "ciphertext line"));
  if (vals.size() < 2) {
    throw Error::io("ciphertext: too short");
  }
  Ciphertext ct;
  ct.a.assign(vals.begin(), vals.end() - 1);
  ct.c = vals.back();
  return ct;
}

}  // namespace hardlearn
