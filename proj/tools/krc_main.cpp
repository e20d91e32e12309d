// krc — command line explorer for the two realizations of KR^{i,m}:
// enumeration, crystal operators, path words, isomorphism images, graph
// export and the verification suite.
#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "krc/graph.hpp"
#include "krc/path_stats.hpp"

namespace {

using namespace krc;

struct Common {
  int n = 0, i = 0, m = 0;
  std::string model = "polytope";
  std::string element;
  std::string out;
};

Params params_of(const Common& c) { return validate_params(c.n, c.i, c.m); }

Model model_of_flag(const std::string& s) {
  if (s == "tableau") return Model::tableau;
  if (s == "polytope") return Model::polytope;
  throw DomainError("--model must be tableau or polytope");
}

// Accepts the canonical JSON object, a bare rows array, a flat row-major
// tuple like (0,1), or a file holding any of those.
Element read_element(const std::string& arg, const Params& p, Model fallback) {
  std::string text = arg;
  const char first = text.empty() ? '\0' : text[0];
  if (first != '{' && first != '[' && first != '(') {
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot open element file: " + arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  }
  const std::string model = fallback == Model::tableau ? "tableau" : "polytope";
  if (!text.empty() && text[0] == '(') {
    // Flat tuple: fill rows of the fallback model's shape.
    std::string rows = "[";
    const int cols = fallback == Model::tableau ? p.m : p.i;
    int in_row = 0;
    bool any = false;
    for (size_t k = 1; k < text.size(); ++k) {
      const char c = text[k];
      if (c == ')') break;
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-')
        throw DecodeError("flat element tuples hold integers only");
      size_t end = k;
      while (end < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '-'))
        ++end;
      if (in_row == 0) rows += any ? ",[" : "[";
      if (in_row > 0) rows += ',';
      rows += text.substr(k, end - k);
      any = true;
      if (++in_row == cols) {
        rows += ']';
        in_row = 0;
      }
      k = end - 1;
    }
    if (in_row != 0) throw DecodeError("flat element tuple does not fill whole rows");
    rows += ']';
    text = "{\"model\":\"" + model + "\",\"rows\":" + rows + "}";
  } else if (!text.empty() && text[0] == '[') {
    text = "{\"model\":\"" + model + "\",\"rows\":" + text + "}";
  }
  return decode_element(text, p);
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out);
  if (!out) throw DomainError("cannot open output file: " + c.out);
  out << text;
}

void add_params(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "rank n")->required();
  cmd->add_option("--i", c.i, "Dynkin node i")->required();
  cmd->add_option("--m", c.m, "level m")->required();
  cmd->add_option("--out", c.out, "write output to a file instead of stdout");
}

int run(int argc, char** argv) {
  CLI::App app{"Kirillov-Reshetikhin crystal explorer (type A, tableau and polytope models)"};
  app.require_subcommand(1);

  Common c;
  std::string word, method = "full", format = "json";
  int column = 1, n_max = 3, m_max = 2;
  bool affine = false, mutate_ties = false;

  auto* enumerate = app.add_subcommand("enumerate", "list all elements, one JSON object per line");
  add_params(enumerate, c);
  enumerate->add_option("--model", c.model, "tableau or polytope");

  auto* apply = app.add_subcommand("apply", "apply an operator word to an element");
  add_params(apply, c);
  apply->add_option("--model", c.model, "tableau or polytope");
  apply->add_option("--word", word, "operator word, leftmost factor applied last")->required();
  apply->add_option("--element", c.element, "element JSON, flat tuple, or file")->required();

  auto* stats = app.add_subcommand("stats", "step-path statistics S, M, R, x of a column");
  add_params(stats, c);
  stats->add_option("--element", c.element, "polytope element")->required();
  stats->add_option("--column", column, "column s with 1 <= s < i")->required();

  auto* path = app.add_subcommand("path", "operator word reaching the element from highest weight");
  add_params(path, c);
  path->add_option("--element", c.element, "polytope element")->required();
  path->add_option("--method", method, "full, P (i <= 2) or Q (i >= n-1)");

  auto* iso = app.add_subcommand("iso", "tableau image of a polytope element");
  add_params(iso, c);
  iso->add_option("--element", c.element, "polytope element")->required();

  auto* graph = app.add_subcommand("graph", "crystal graph as JSON or DOT");
  add_params(graph, c);
  graph->add_option("--model", c.model, "tableau or polytope");
  graph->add_option("--format", format, "json or dot");
  graph->add_flag("--affine", affine, "include the label-0 edges");

  auto* verify = app.add_subcommand("verify", "run the verification suite over a parameter range");
  verify->add_option("--n-max", n_max, "largest rank to check");
  verify->add_option("--m-max", m_max, "largest level to check");
  verify->add_option("--out", c.out, "write the report to a file");
  verify->add_flag("--mutate-ties", mutate_ties,
                   "self-test hook: swap pivot tie-breaking and watch the suite fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  if (verify->parsed()) {
    graph::VerifyOptions opts;
    opts.tie_break = mutate_ties ? poly::TieBreak::swapped : poly::TieBreak::standard;
    const auto report = graph::verify_suite(graph::param_range(n_max, m_max), opts);
    emit(c, report.to_text());
    return report.all_pass() ? 0 : 1;
  }

  const Params params = params_of(c);
  const Model model = model_of_flag(c.model);

  if (enumerate->parsed()) {
    std::string lines;
    if (model == Model::polytope)
      poly::for_each_point(params,
                           [&](const poly::PolytopePoint& a) { lines += encode_element(a); lines += '\n'; });
    else
      for (const auto& t : tab::enumerate_tableaux(params)) {
        lines += encode_element(t);
        lines += '\n';
      }
    emit(c, lines);
  } else if (apply->parsed()) {
    const Element e = read_element(c.element, params, model);
    const auto w = words::parse_word(word, params.n);
    const Element result = words::apply_word(w, e, params);
    emit(c, encode_element(result) + "\n");
  } else if (stats->parsed()) {
    const Element e = read_element(c.element, params, Model::polytope);
    const auto& a = std::get<poly::PolytopePoint>(e);
    const auto b = stats::stat_bundle(a, column);
    std::string js = "{\"column\":" + std::to_string(b.column) +
                     ",\"row_start\":" + std::to_string(b.row_start) + ",\"S\":[";
    for (size_t k = 0; k < b.path_sums.size(); ++k)
      js += (k ? "," : "") + std::to_string(b.path_sums[k]);
    js += "],\"M\":" + std::to_string(b.max_sum) + ",\"R\":[";
    for (size_t k = 0; k < b.records.size(); ++k)
      js += (k ? "," : "") + std::to_string(b.records[k]);
    js += "],\"x\":[";
    for (size_t k = 0; k < b.increments.size(); ++k)
      js += (k ? "," : "") + std::to_string(b.increments[k]);
    js += "],\"phi\":" + std::to_string(poly::string_stats(a, column, params).phi) + "}";
    emit(c, js + "\n");
  } else if (path->parsed()) {
    const Element e = read_element(c.element, params, Model::polytope);
    const auto& a = std::get<poly::PolytopePoint>(e);
    words::OperatorWord w;
    if (method == "full")
      w = words::word_full_path(a, params);
    else if (method == "P")
      w = words::word_P_small_i(a, params);
    else if (method == "Q")
      w = words::word_Q_large_i(a, params);
    else
      throw DomainError("--method must be full, P or Q");
    emit(c, words::render_word(w) + "\n");
  } else if (iso->parsed()) {
    const Element e = read_element(c.element, params, Model::polytope);
    const auto& a = std::get<poly::PolytopePoint>(e);
    emit(c, encode_element(graph::transport_image(a, params)) + "\n");
  } else if (graph->parsed()) {
    const auto g = graph::build_graph(params, model, affine);
    if (format == "dot")
      emit(c, graph::to_dot(g));
    else if (format == "json")
      emit(c, graph::to_json(g) + "\n");
    else
      throw DomainError("--format must be json or dot");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const krc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
