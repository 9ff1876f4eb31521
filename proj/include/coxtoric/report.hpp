#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fan.hpp"
#include "fan_io.hpp"
#include "fixtures.hpp"
#include "grading.hpp"
#include "hilbert.hpp"
#include "models.hpp"

namespace coxtoric {

namespace detail {

inline std::string format_matrix_rows(const IntegerMatrix& m, const std::string& indent) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j);
    }
    os << "\n";
  }
  return os.str();
}

inline std::string format_matrix_flat(const IntegerMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j);
    }
  }
  return os.str();
}

// (x1,x2,x5) style; base is the display index of variable 0.
inline std::string format_components(const std::vector<std::vector<int>>& primes, int base) {
  std::ostringstream os;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) os << " ";
    os << "(";
    for (std::size_t j = 0; j < primes[i].size(); ++j) {
      if (j) os << ",";
      os << "x" << primes[i][j] + base;
    }
    os << ")";
  }
  return os.str();
}

inline std::string format_class(const DivisorClass& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ", ";
    os << w[i];
  }
  os << ")";
  return os.str();
}

}  // namespace detail

// Keyed report: dim, ray count, grading matrix, irrelevant components,
// lefschetz check, smooth/complete/fano flags, anticanonical degree, kernel.
inline std::string cmd_analyze(const Fan& f, const std::string& label, bool tsv) {
  FanValidation val = validate_fan(f);
  if (!val.valid) {
    std::string msg = label + ": invalid fan:";
    for (const std::string& p : val.problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }

  GradingData g = grading_from_fan(f);
  std::vector<std::vector<int>> primes = minimal_primes(g.irrelevant);
  LefschetzCheck lef = lefschetz_codim_check(g);
  bool smooth = is_smooth(f);

  std::string complete = "undecided";
  try {
    complete = is_complete(f) ? "yes" : "no";
  } catch (const std::invalid_argument&) {
    complete = "undecided (not pure simplicial)";
  }
  bool fano = is_fano(f);
  std::string degree = "n/a";
  try {
    degree = anticanonical_degree(f).str();
  } catch (const std::domain_error&) {
  }
  IntegerMatrix kernel = integer_kernel(IntegerMatrix::from_rows(f.rays, f.dim));

  std::ostringstream os;
  if (tsv) {
    os << label << "\tdim\t" << f.dim << "\n";
    os << label << "\trays\t" << f.rays.size() << "\n";
    os << label << "\tgrading\t" << detail::format_matrix_flat(g.degree_matrix) << "\n";
    os << label << "\tcomponents\t" << detail::format_components(primes, 1) << "\n";
    os << label << "\tcodim\t" << lef.codim << "\n";
    os << label << "\tlefschetz\t" << (lef.passes ? "pass" : "fail") << "\n";
    os << label << "\tsmooth\t" << (smooth ? "yes" : "no") << "\n";
    os << label << "\tcomplete\t" << complete << "\n";
    os << label << "\tfano\t" << (fano ? "yes" : "no") << "\n";
    os << label << "\tdegree\t" << degree << "\n";
    os << label << "\tkernel\t" << detail::format_matrix_flat(kernel) << "\n";
  } else {
    os << "fan: " << label << "\n";
    os << "dim: " << f.dim << "\n";
    os << "rays: " << f.rays.size() << "\n";
    os << "grading matrix (HNF rows):\n"
       << detail::format_matrix_rows(g.degree_matrix, "  ");
    os << "irrelevant components: " << detail::format_components(primes, 1) << "\n";
    os << "irrelevant codim: " << lef.codim << "\n";
    os << "lefschetz (codim >= 3): " << (lef.passes ? "pass" : "fail") << "\n";
    os << "smooth: " << (smooth ? "yes" : "no") << "\n";
    os << "complete: " << complete << "\n";
    os << "fano: " << (fano ? "yes" : "no") << "\n";
    os << "anticanonical degree: " << degree << "\n";
    os << "ray matrix left kernel (HNF rows):\n"
       << detail::format_matrix_rows(kernel, "  ");
  }
  return os.str();
}

// Dual variety summary: ray count and Lefschetz codimension of the face fan
// of the anticanonical polytope.
inline std::string cmd_dual(const Fan& f, const std::string& label, bool tsv) {
  if (!is_fano(f)) throw std::domain_error(label + ": fan is not Fano");
  Fan dual = dual_variety(f);
  // The dual fan often spans a finite-index sublattice (torsion class group),
  // so the codimension is read off the irrelevant ideal, not the grading.
  std::size_t codim = vanishing_codim(irrelevant_ideal(dual));
  bool passes = codim >= 3;

  std::ostringstream os;
  if (tsv) {
    os << label << "\tdual_rays\t" << dual.rays.size() << "\n";
    os << label << "\tdual_codim\t" << codim << "\n";
    os << label << "\tdual_lefschetz\t" << (passes ? "pass" : "fail") << "\n";
  } else {
    os << "dual of " << label << ":\n";
    os << "rays: " << dual.rays.size() << "\n";
    os << "irrelevant codim: " << codim << "\n";
    os << "lefschetz (codim >= 3): " << (passes ? "pass" : "fail") << "\n";
  }
  return os.str();
}

struct ScanOutcome {
  std::string report;               // selected entries, sorted by file name
  std::vector<std::string> errors;  // per-file diagnostics
};

// Every regular file in the directory is parsed as a fan file; entries whose
// irrelevant locus has codimension >= 3 are listed. Failures never stop the
// scan.
inline ScanOutcome cmd_scan(const std::filesystem::path& dir, bool tsv) {
  if (!std::filesystem::is_directory(dir))
    throw std::invalid_argument("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

  ScanOutcome out;
  std::ostringstream os;
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    try {
      Fan f = parse_fan_file(path);
      std::size_t codim = vanishing_codim(irrelevant_ideal(f));
      if (codim >= 3) {
        if (tsv)
          os << name << "\t" << codim << "\n";
        else
          os << name << ": codim " << codim << "\n";
      }
    } catch (const std::exception& e) {
      out.errors.push_back(std::string("scan: ") + e.what());
    }
  }
  out.report = os.str();
  return out;
}

// Both section-4 gradings with their irrelevant decompositions and codims.
inline std::string cmd_blowup_model(int n, int d, bool tsv) {
  BlowupModel m{n, d};
  GradingData bl = blowup_grading(m);
  GradingData z1 = z1_grading(m);
  std::vector<std::vector<int>> bl_primes = minimal_primes(bl.irrelevant);
  std::vector<std::vector<int>> z1_primes = minimal_primes(z1.irrelevant);
  LefschetzCheck bl_lef = lefschetz_codim_check(bl);
  LefschetzCheck z1_lef = lefschetz_codim_check(z1);

  std::ostringstream os;
  if (tsv) {
    os << "blowup\tn\t" << n << "\n";
    os << "blowup\tgrading\t" << detail::format_matrix_flat(bl.degree_matrix) << "\n";
    os << "blowup\tcomponents\t" << detail::format_components(bl_primes, 1) << "\n";
    os << "blowup\tcodim\t" << bl_lef.codim << "\n";
    os << "blowup\tlefschetz\t" << (bl_lef.passes ? "pass" : "fail") << "\n";
    os << "z1\tn\t" << n << "\n";
    os << "z1\td\t" << d << "\n";
    os << "z1\tgrading\t" << detail::format_matrix_flat(z1.degree_matrix) << "\n";
    os << "z1\tcomponents\t" << detail::format_components(z1_primes, 0) << "\n";
    os << "z1\tcodim\t" << z1_lef.codim << "\n";
    os << "z1\tlefschetz\t" << (z1_lef.passes ? "pass" : "fail") << "\n";
  } else {
    os << "blowup of P^" << n << " along a codim-2 linear subspace:\n";
    os << "grading matrix:\n" << detail::format_matrix_rows(bl.degree_matrix, "  ");
    os << "irrelevant components: " << detail::format_components(bl_primes, 1) << "\n";
    os << "irrelevant codim: " << bl_lef.codim << "\n";
    os << "lefschetz (codim >= 3): " << (bl_lef.passes ? "pass" : "fail") << "\n";
    os << "z1 model (d = " << d << "):\n";
    os << "grading matrix:\n" << detail::format_matrix_rows(z1.degree_matrix, "  ");
    os << "irrelevant components: " << detail::format_components(z1_primes, 0) << "\n";
    os << "irrelevant codim: " << z1_lef.codim << "\n";
    os << "lefschetz (codim >= 3): " << (z1_lef.passes ? "pass" : "fail") << "\n";
  }
  return os.str();
}

// Graded dimension of the model quotient ring at one degree; optionally the
// independent linear-algebra count alongside.
inline std::string cmd_hilbert(const std::string& model, int n, int d, long long a,
                               long long b, bool with_oracle, std::uint64_t seed,
                               bool tsv) {
  CompleteIntersectionSpec spec;
  if (model == "cox3") {
    if (n != 3) throw std::invalid_argument("model cox3 requires n = 3");
    spec = cox3_spec(d, seed);
  } else if (model == "cox4") {
    spec = cox4_spec(BlowupModel{n, d}, seed);
  } else {
    throw std::invalid_argument("unknown model '" + model + "'");
  }

  const IVec w = {Integer(a), Integer(b)};
  long long dim = ci_dimension(spec, w);

  std::ostringstream os;
  if (tsv) {
    os << "hilbert\tmodel\t" << model << "\n";
    os << "hilbert\tn\t" << n << "\n";
    os << "hilbert\td\t" << d << "\n";
    os << "hilbert\tdegree\t" << a << " " << b << "\n";
    os << "hilbert\tdim\t" << dim << "\n";
    if (with_oracle) os << "hilbert\toracle\t" << quotient_dim_oracle(spec, w) << "\n";
  } else {
    os << "model: " << model << " (n = " << n << ", d = " << d << ")\n";
    os << "degree: " << detail::format_class(w) << "\n";
    os << "dimension: " << dim << "\n";
    if (with_oracle) os << "oracle dimension: " << quotient_dim_oracle(spec, w) << "\n";
  }
  return os.str();
}

}  // namespace coxtoric
