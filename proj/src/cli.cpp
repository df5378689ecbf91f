#include "clasp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "clasp/bounds.hpp"
#include "clasp/complex.hpp"
#include "clasp/invariants.hpp"
#include "clasp/oracles.hpp"
#include "clasp/word.hpp"

namespace clasp::cli {

std::string render_curve_svg(const LatticeCurve& c, bool grid) {
  auto v = c.vertices();
  auto [min_x, max_x] = std::minmax_element(v.begin(), v.end(), [](auto& p, auto& q) { return p.x < q.x; });
  auto [min_y, max_y] = std::minmax_element(v.begin(), v.end(), [](auto& p, auto& q) { return p.y < q.y; });
  const std::int64_t x0 = min_x->x - 1;
  const std::int64_t y1 = max_y->y + 1;
  const std::int64_t cols = max_x->x - min_x->x + 2;
  const std::int64_t rows = max_y->y - min_y->y + 2;
  const std::int64_t width = cols * kPixelsPerUnit;
  const std::int64_t height = rows * kPixelsPerUnit;
  auto px = [&](std::int64_t x) { return (x - x0) * kPixelsPerUnit; };
  auto py = [&](std::int64_t y) { return (y1 - y) * kPixelsPerUnit; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  if (grid) {
    svg << "  <g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
    for (std::int64_t col = 0; col <= cols; ++col)
      svg << "    <line x1=\"" << col * kPixelsPerUnit << "\" y1=\"0\" x2=\"" << col * kPixelsPerUnit << "\" y2=\""
          << height << "\"/>\n";
    for (std::int64_t row = 0; row <= rows; ++row)
      svg << "    <line x1=\"0\" y1=\"" << row * kPixelsPerUnit << "\" x2=\"" << width << "\" y2=\""
          << row * kPixelsPerUnit << "\"/>\n";
    svg << "  </g>\n";
  }
  const bool fill = is_closed(c) && is_simple(c);
  svg << "  <polyline fill=\"" << (fill ? "#cfe0f5" : "none")
      << "\" stroke=\"black\" stroke-width=\"3\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t n = 0; n < v.size(); ++n)
    svg << (n ? " " : "") << px(v[n].x) << ',' << py(v[n].y);
  svg << "\"/>\n";
  svg << "  <circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"6\" fill=\"#c03030\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

namespace {

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw IoFailure("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

ClaspWord read_word(const std::string& arg, std::istream& in) {
  return arg == "-" ? parse_word(read_source(arg, in)) : parse_word(arg);
}

CComplex read_complex(const std::string& path, std::istream& in) {
  auto f = parse_complex(read_source(path, in));
  require_valid(f);
  return f;
}

std::string curve_summary(const LatticeCurve& c) {
  std::ostringstream s;
  const auto integral = line_integral_x_dy(c);
  s << "length=" << c.length();
  if (!is_closed(c))
    s << " open";
  else if (is_simple(c))
    s << " closed simple area=" << (integral < 0 ? -integral : integral);
  else
    s << " closed non-simple";
  s << " integral=" << integral << '\n';
  return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clasp-word invariants, C-complex bounds and brute-force oracles", "clasptool"};
  app.require_subcommand(1);

  std::string word_text;
  std::string path;
  std::string svg_path;
  std::string method = "sum";
  std::string oracle_kind;
  int i = 0;
  int j = 0;
  int k = 0;
  int n = 0;
  int max_area = oracle::kDefaultAreaCap;
  int max_len = oracle::kDefaultLengthCap;
  int cap = 0;
  bool grid = false;

  auto* eij = app.add_subcommand("eij", "e_ij of a clasp word");
  eij->add_option("WORD", word_text, "word text, or - for stdin")->required();
  eij->add_option("I", i)->required();
  eij->add_option("J", j)->required();
  eij->add_option("--method", method, "sum, integral or both")
      ->check(CLI::IsMember({"sum", "integral", "both"}));

  auto* curve = app.add_subcommand("curve", "lattice curve of a word as SVG");
  curve->add_option("WORD", word_text, "word text, or - for stdin")->required();
  curve->add_option("I", i)->required();
  curve->add_option("J", j)->required();
  curve->add_option("--out", svg_path, "output SVG path")->required();
  curve->add_flag("--grid", grid, "draw unit grid lines");

  auto* mu = app.add_subcommand("mu", "triple linking number of a C-complex");
  mu->add_option("FILE", path)->required();
  mu->add_option("I", i)->required();
  mu->add_option("J", j)->required();
  mu->add_option("K", k)->required();

  auto* lk = app.add_subcommand("lk", "pairwise linking number of a C-complex");
  lk->add_option("FILE", path)->required();
  lk->add_option("I", i)->required();
  lk->add_option("J", j)->required();

  auto* words = app.add_subcommand("words", "clasp words of every component");
  words->add_option("FILE", path)->required();

  auto* bounds = app.add_subcommand("bounds", "bounds on the clasp number");
  bounds->add_option("FILE", path)->required();

  auto* check = app.add_subcommand("validate", "check a C-complex file");
  check->add_option("FILE", path)->required();

  auto* gen = app.add_subcommand("gen-brn", "C-complex of the generalized Borromean rings");
  gen->add_option("N", n)->required();

  auto* orc = app.add_subcommand("oracle", "run a brute-force oracle");
  orc->add_option("KIND", oracle_kind)->required()->check(CLI::IsMember({"polyomino", "words"}));
  orc->add_option("--max-area", max_area, "largest polyomino area");
  orc->add_option("--max-len", max_len, "longest word length");
  orc->add_option("--cap", cap, "raise the runtime guard on --max-area/--max-len");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (eij->parsed()) {
      auto w = read_word(word_text, in);
      if (i == j)
        throw std::invalid_argument("I and J must differ");
      const auto by_sum = e_ij(w, i, j);
      const auto by_integral = line_integral_x_dy(build_curve(w, i, j));
      if (method == "sum") {
        out << by_sum << '\n';
      } else if (method == "integral") {
        out << by_integral << '\n';
      } else {
        out << "sum = " << by_sum << '\n' << "integral = " << by_integral << '\n';
      }
      return by_sum == by_integral ? kOk : kDisagreement;
    }
    if (curve->parsed()) {
      auto w = read_word(word_text, in);
      if (i == j)
        throw std::invalid_argument("I and J must differ");
      auto c = build_curve(w, i, j);
      std::ofstream file(svg_path, std::ios::binary);
      if (!file || !(file << render_curve_svg(c, grid)) || !file.flush())
        throw IoFailure("cannot write '" + svg_path + "'");
      out << curve_summary(c);
      return kOk;
    }
    if (mu->parsed()) {
      auto f = read_complex(path, in);
      auto r = triple_linking(f, i, j, k);
      out << "mu = " << r.value << '\n';
      out << "e_" << i << j << "(w" << k << ") = " << r.contributions[0] << '\n';
      out << "e_" << j << k << "(w" << i << ") = " << r.contributions[1] << '\n';
      out << "e_" << k << i << "(w" << j << ") = " << r.contributions[2] << '\n';
      out << (r.well_defined ? "WELL-DEFINED" : "NOT-WELL-DEFINED") << '\n';
      return kOk;
    }
    if (lk->parsed()) {
      out << pairwise_linking(read_complex(path, in), i, j) << '\n';
      return kOk;
    }
    if (words->parsed()) {
      auto f = read_complex(path, in);
      for (int c = 1; c <= f.components(); ++c) {
        auto text = to_string(clasp_word(f, c));
        out << 'w' << c << " =" << (text.empty() ? "" : " ") << text << '\n';
      }
      return kOk;
    }
    if (bounds->parsed()) {
      out << format_bound_report(bound_report(read_complex(path, in)));
      return kOk;
    }
    if (check->parsed()) {
      auto violations = validate(parse_complex(read_source(path, in)));
      if (violations.empty()) {
        out << "valid\n";
        return kOk;
      }
      for (const auto& v : violations)
        out << v.kind << ": " << v.detail << '\n';
      return kInputError;
    }
    if (gen->parsed()) {
      out << to_file_format(generate_brn(n));
      return kOk;
    }
    if (orc->parsed()) {
      if (oracle_kind == "polyomino") {
        auto sweep = oracle::verify_min_perimeter(max_area, std::max(cap, oracle::kDefaultAreaCap));
        out << oracle::format_reports("area", sweep.reports);
        out << std::left << std::setw(12) << "area" << std::right << std::setw(10) << "grown"
            << std::setw(11) << "redelmeier" << '\n';
        for (std::size_t a = 0; a < sweep.counts.size(); ++a)
          out << std::left << std::setw(12) << a + 1 << std::right << std::setw(10) << sweep.counts[a]
              << std::setw(11) << sweep.counts_check[a] << '\n';
        out << (sweep.all_agree() ? "all agree" : "DISAGREEMENT") << '\n';
        return sweep.all_agree() ? kOk : kDisagreement;
      }
      auto sweep = oracle::verify_word_length_bound(max_len, std::max(cap, oracle::kDefaultLengthCap));
      out << oracle::format_reports("|e_12|", sweep.reports);
      out << "words checked = " << sweep.words_checked << '\n';
      out << "word length counterexamples = " << sweep.length_bound_violations << '\n';
      out << "curve length counterexamples = " << sweep.curve_bound_violations << '\n';
      out << "sum/integral mismatches = " << sweep.integral_mismatches << '\n';
      out << (sweep.all_agree() ? "all agree" : "DISAGREEMENT") << '\n';
      return sweep.all_agree() ? kOk : kDisagreement;
    }
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    // ParseError, invalid_argument and out_of_range all mean bad input.
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace clasp::cli
