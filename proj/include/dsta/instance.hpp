#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace dsta {

using Cost = std::int64_t;

enum class WeightKind { Euc2D, Ceil2D, Att, Geo, Explicit };
enum class WeightFormat { None, FullMatrix, UpperRow, LowerDiagRow };

inline std::string_view to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::Euc2D: return "EUC_2D";
        case WeightKind::Ceil2D: return "CEIL_2D";
        case WeightKind::Att: return "ATT";
        case WeightKind::Geo: return "GEO";
        case WeightKind::Explicit: return "EXPLICIT";
    }
    return "?";
}

inline std::string_view to_string(WeightFormat format) {
    switch (format) {
        case WeightFormat::None: return "";
        case WeightFormat::FullMatrix: return "FULL_MATRIX";
        case WeightFormat::UpperRow: return "UPPER_ROW";
        case WeightFormat::LowerDiagRow: return "LOWER_DIAG_ROW";
    }
    return "?";
}

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point &, const Point &) = default;
};

// Raised by the GTSPLIB reader. line() is 1-based; 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &reason)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + reason : reason),
          line_(line), reason_(reason) {}

    std::size_t line() const { return line_; }
    const std::string &reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

// Raw instance content before validation. Vertex and cluster ids are 1-based.
struct InstanceData {
    std::string name;
    std::string comment;
    WeightKind kind = WeightKind::Euc2D;
    WeightFormat format = WeightFormat::None;
    int n = 0;
    std::vector<Point> coords;            // n entries for coordinate kinds
    std::vector<Cost> explicit_costs;     // n*n row-major for EXPLICIT
    std::vector<std::vector<int>> clusters;
};

namespace detail {

inline Cost nint(double x) { return static_cast<Cost>(x + 0.5); }

inline double geo_radians(double coord) {
    constexpr double pi = 3.141592;
    const double deg = std::trunc(coord);
    const double min = coord - deg;
    return pi * (deg + 5.0 * min / 3.0) / 180.0;
}

inline Cost coordinate_cost(WeightKind kind, const Point &a, const Point &b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    switch (kind) {
        case WeightKind::Euc2D: return nint(std::sqrt(dx * dx + dy * dy));
        case WeightKind::Ceil2D: return static_cast<Cost>(std::ceil(std::sqrt(dx * dx + dy * dy)));
        case WeightKind::Att: {
            const double r = std::sqrt((dx * dx + dy * dy) / 10.0);
            const Cost t = nint(r);
            return static_cast<double>(t) < r ? t + 1 : t;
        }
        case WeightKind::Geo: {
            constexpr double rrr = 6378.388;
            const double lat_a = geo_radians(a.x), lon_a = geo_radians(a.y);
            const double lat_b = geo_radians(b.x), lon_b = geo_radians(b.y);
            const double q1 = std::cos(lon_a - lon_b);
            const double q2 = std::cos(lat_a - lat_b);
            const double q3 = std::cos(lat_a + lat_b);
            return static_cast<Cost>(rrr * std::acos(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3)) + 1.0);
        }
        case WeightKind::Explicit: break;
    }
    throw std::logic_error("coordinate_cost called for EXPLICIT instance");
}

}  // namespace detail

// Symmetric GTSP instance. Immutable once constructed; all ids at the interface are 1-based.
class Instance {
public:
    static constexpr int dense_limit = 1000;

    explicit Instance(InstanceData data) : data_(std::move(data)) {
        validate();
        if (data_.kind != WeightKind::Explicit && data_.n <= dense_limit) {
            const auto n = static_cast<std::size_t>(data_.n);
            dense_.resize(n * n);
            for (std::size_t u = 0; u < n; ++u) {
                for (std::size_t v = u + 1; v < n; ++v) {
                    const Cost c = detail::coordinate_cost(data_.kind, data_.coords[u], data_.coords[v]);
                    dense_[u * n + v] = c;
                    dense_[v * n + u] = c;
                }
            }
        }
    }

    const std::string &name() const { return data_.name; }
    const std::string &comment() const { return data_.comment; }
    int n() const { return data_.n; }
    int m() const { return static_cast<int>(data_.clusters.size()); }
    WeightKind weight_kind() const { return data_.kind; }
    WeightFormat weight_format() const { return data_.format; }
    bool has_coords() const { return !data_.coords.empty(); }

    const Point &coord(int v) const {
        check_vertex(v);
        if (!has_coords()) throw std::logic_error("instance has no coordinates");
        return data_.coords[static_cast<std::size_t>(v - 1)];
    }

    // Members of cluster c, ascending vertex id.
    const std::vector<int> &cluster(int c) const {
        if (c < 1 || c > m()) throw std::out_of_range("cluster index " + std::to_string(c) + " out of range");
        return data_.clusters[static_cast<std::size_t>(c - 1)];
    }

    const std::vector<std::vector<int>> &clusters() const { return data_.clusters; }

    int cluster_of(int v) const {
        check_vertex(v);
        return vertex_to_cluster_[static_cast<std::size_t>(v - 1)];
    }

    Cost edge_cost(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return cost_unchecked(u, v);
    }

    // Hot-path variant for callers that already hold valid ids.
    Cost cost_unchecked(int u, int v) const {
        const auto n = static_cast<std::size_t>(data_.n);
        const auto iu = static_cast<std::size_t>(u - 1);
        const auto iv = static_cast<std::size_t>(v - 1);
        if (!dense_.empty()) return dense_[iu * n + iv];
        if (data_.kind == WeightKind::Explicit) return data_.explicit_costs[iu * n + iv];
        if (u == v) return 0;
        return detail::coordinate_cost(data_.kind, data_.coords[iu], data_.coords[iv]);
    }

    const InstanceData &data() const { return data_; }

    friend bool operator==(const Instance &a, const Instance &b) {
        const auto &x = a.data_;
        const auto &y = b.data_;
        return x.name == y.name && x.comment == y.comment && x.kind == y.kind && x.format == y.format &&
               x.n == y.n && x.coords == y.coords && x.explicit_costs == y.explicit_costs &&
               x.clusters == y.clusters;
    }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > data_.n) throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
    }

    void validate() {
        auto &d = data_;
        if (d.n <= 0) throw std::invalid_argument("DIMENSION must be positive");
        if (d.clusters.empty()) throw std::invalid_argument("at least one cluster is required");
        if (static_cast<int>(d.clusters.size()) > d.n) throw std::invalid_argument("more clusters than vertices");
        const auto n = static_cast<std::size_t>(d.n);
        if (d.kind == WeightKind::Explicit) {
            if (d.explicit_costs.size() != n * n) throw std::invalid_argument("explicit cost table has wrong size");
            for (std::size_t u = 0; u < n; ++u) {
                d.explicit_costs[u * n + u] = 0;
                for (std::size_t v = 0; v < u; ++v) {
                    if (d.explicit_costs[u * n + v] != d.explicit_costs[v * n + u])
                        throw std::invalid_argument("explicit cost table is not symmetric at (" +
                                                    std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
                    if (d.explicit_costs[u * n + v] < 0) throw std::invalid_argument("negative edge cost");
                }
            }
        } else if (d.coords.size() != n) {
            throw std::invalid_argument("coordinate count does not match DIMENSION");
        }

        vertex_to_cluster_.assign(n, 0);
        for (std::size_t c = 0; c < d.clusters.size(); ++c) {
            auto &members = d.clusters[c];
            if (members.empty()) throw std::invalid_argument("cluster " + std::to_string(c + 1) + " is empty");
            std::sort(members.begin(), members.end());
            for (int v : members) {
                if (v < 1 || v > d.n)
                    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range in cluster " +
                                                std::to_string(c + 1));
                auto &slot = vertex_to_cluster_[static_cast<std::size_t>(v - 1)];
                if (slot != 0)
                    throw std::invalid_argument("vertex " + std::to_string(v) + " appears in clusters " +
                                                std::to_string(slot) + " and " + std::to_string(c + 1));
                slot = static_cast<int>(c + 1);
            }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (vertex_to_cluster_[v] == 0)
                throw std::invalid_argument("vertex " + std::to_string(v + 1) + " belongs to no cluster");
    }

    InstanceData data_;
    std::vector<int> vertex_to_cluster_;
    std::vector<Cost> dense_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Whitespace token stream over a range of lines, remembering each token's line.
class TokenStream {
public:
    TokenStream(const std::vector<Line> &lines, std::size_t begin, std::size_t end)
        : lines_(lines), line_(begin), end_(end) {}

    std::optional<std::pair<std::string_view, std::size_t>> next() {
        while (line_ < end_) {
            const auto text = lines_[line_].text;
            while (col_ < text.size() && (text[col_] == ' ' || text[col_] == '\t' || text[col_] == '\r')) ++col_;
            if (col_ < text.size()) {
                const auto start = col_;
                while (col_ < text.size() && text[col_] != ' ' && text[col_] != '\t' && text[col_] != '\r') ++col_;
                return std::pair{text.substr(start, col_ - start), lines_[line_].number};
            }
            ++line_;
            col_ = 0;
        }
        return std::nullopt;
    }

    std::size_t current_line() const { return line_ < end_ ? lines_[line_].number : last_line(); }

private:
    std::size_t last_line() const { return end_ > 0 ? lines_[end_ - 1].number : 0; }

    const std::vector<Line> &lines_;
    std::size_t line_;
    std::size_t end_;
    std::size_t col_ = 0;
};

template <typename T>
T parse_number(std::string_view token, std::size_t line, const char *what) {
    T value{};
    const auto *first = token.data();
    const auto *last = token.data() + token.size();
    if constexpr (std::is_floating_point_v<T>) {
        // from_chars for double is unavailable on older libstdc++ builds; strtod is locale-free enough here.
        std::string copy(token);
        char *end = nullptr;
        value = std::strtod(copy.c_str(), &end);
        if (copy.empty() || end != copy.c_str() + copy.size())
            throw ParseError(line, std::string("expected ") + what + ", got '" + copy + "'");
    } else {
        if (!token.empty() && token.front() == '+') ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

inline bool is_section_keyword(std::string_view key) {
    return key == "NODE_COORD_SECTION" || key == "EDGE_WEIGHT_SECTION" || key == "GTSP_SET_SECTION" ||
           key == "DISPLAY_DATA_SECTION" || key == "EOF";
}

// Splits "KEY : value" / "KEY: value" / "KEY" into key and value.
inline std::pair<std::string_view, std::string_view> split_key(std::string_view line) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
        const auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos) return {line, {}};
        return {trim(line.substr(0, space)), trim(line.substr(space))};
    }
    return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

}  // namespace detail

// Reads a GTSPLIB instance. Throws ParseError with the offending line number.
inline Instance parse_gtsplib(std::string_view text) {
    using namespace detail;

    std::vector<Line> lines;
    for (std::size_t pos = 0, number = 1; pos <= text.size(); ++number) {
        const auto nl = text.find('\n', pos);
        const auto stop = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back({number, text.substr(pos, stop - pos)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    InstanceData data;
    std::optional<int> dimension;
    std::optional<int> set_count;
    std::optional<WeightKind> kind;
    bool seen_coords = false, seen_weights = false, seen_sets = false, seen_type = false;
    std::size_t weight_section_line = 0;
    std::vector<std::pair<std::string_view, std::size_t>> weight_tokens;

    auto section_end = [&](std::size_t from) {
        std::size_t i = from;
        while (i < lines.size()) {
            const auto t = trim(lines[i].text);
            if (!t.empty()) {
                const auto key = split_key(t).first;
                if (is_section_keyword(key)) break;
                if (!t.empty() && (std::isalpha(static_cast<unsigned char>(t.front())) != 0) &&
                    t.find(':') != std::string_view::npos)
                    break;
            }
            ++i;
        }
        return i;
    };

    auto require_header = [&](std::size_t line) {
        if (!dimension) throw ParseError(line, "DIMENSION must precede data sections");
    };

    std::size_t i = 0;
    bool seen_eof = false;
    while (i < lines.size()) {
        const auto t = trim(lines[i].text);
        const std::size_t line_no = lines[i].number;
        if (t.empty()) {
            ++i;
            continue;
        }
        auto [key, value] = split_key(t);
        if (key == "EOF") {
            seen_eof = true;
            break;
        }
        if (key == "NAME") {
            data.name = std::string(value);
        } else if (key == "TYPE") {
            if (value != "GTSP") throw ParseError(line_no, "TYPE must be GTSP, got '" + std::string(value) + "'");
            seen_type = true;
        } else if (key == "COMMENT") {
            if (!data.comment.empty()) data.comment += '\n';
            data.comment += std::string(value);
        } else if (key == "DIMENSION") {
            dimension = parse_number<int>(value, line_no, "integer DIMENSION");
            if (*dimension <= 0) throw ParseError(line_no, "DIMENSION must be positive");
        } else if (key == "GTSP_SETS") {
            set_count = parse_number<int>(value, line_no, "integer GTSP_SETS");
            if (*set_count <= 0) throw ParseError(line_no, "GTSP_SETS must be positive");
        } else if (key == "EDGE_WEIGHT_TYPE") {
            if (value == "EUC_2D") kind = WeightKind::Euc2D;
            else if (value == "CEIL_2D") kind = WeightKind::Ceil2D;
            else if (value == "ATT") kind = WeightKind::Att;
            else if (value == "GEO") kind = WeightKind::Geo;
            else if (value == "EXPLICIT") kind = WeightKind::Explicit;
            else throw ParseError(line_no, "unsupported EDGE_WEIGHT_TYPE '" + std::string(value) + "'");
        } else if (key == "EDGE_WEIGHT_FORMAT") {
            if (value == "FULL_MATRIX") data.format = WeightFormat::FullMatrix;
            else if (value == "UPPER_ROW") data.format = WeightFormat::UpperRow;
            else if (value == "LOWER_DIAG_ROW") data.format = WeightFormat::LowerDiagRow;
            else if (value == "FUNCTION") data.format = WeightFormat::None;
            else throw ParseError(line_no, "unsupported EDGE_WEIGHT_FORMAT '" + std::string(value) + "'");
        } else if (key == "NODE_COORD_TYPE" || key == "DISPLAY_DATA_TYPE") {
            // informational only
        } else if (key == "NODE_COORD_SECTION") {
            require_header(line_no);
            if (!value.empty()) throw ParseError(line_no, "unexpected text after NODE_COORD_SECTION");
            const auto end = section_end(i + 1);
            TokenStream tokens(lines, i + 1, end);
            data.coords.assign(static_cast<std::size_t>(*dimension), Point{});
            std::vector<bool> seen(static_cast<std::size_t>(*dimension), false);
            for (int k = 0; k < *dimension; ++k) {
                auto id_tok = tokens.next();
                if (!id_tok)
                    throw ParseError(tokens.current_line(),
                                     "NODE_COORD_SECTION has " + std::to_string(k) + " entries, DIMENSION is " +
                                         std::to_string(*dimension));
                const int id = parse_number<int>(id_tok->first, id_tok->second, "vertex id");
                if (id < 1 || id > *dimension)
                    throw ParseError(id_tok->second, "vertex id " + std::to_string(id) + " outside 1.." +
                                                         std::to_string(*dimension));
                if (seen[static_cast<std::size_t>(id - 1)])
                    throw ParseError(id_tok->second, "duplicate coordinates for vertex " + std::to_string(id));
                seen[static_cast<std::size_t>(id - 1)] = true;
                auto x_tok = tokens.next();
                auto y_tok = tokens.next();
                if (!x_tok || !y_tok) throw ParseError(id_tok->second, "truncated coordinate line");
                if (x_tok->second != id_tok->second || y_tok->second != id_tok->second)
                    throw ParseError(id_tok->second, "coordinate line must hold '<id> <x> <y>'");
                data.coords[static_cast<std::size_t>(id - 1)] = {parse_number<double>(x_tok->first, x_tok->second, "x"),
                                                                 parse_number<double>(y_tok->first, y_tok->second, "y")};
            }
            if (auto extra = tokens.next())
                throw ParseError(extra->second, "NODE_COORD_SECTION has more entries than DIMENSION");
            seen_coords = true;
            i = end;
            continue;
        } else if (key == "EDGE_WEIGHT_SECTION") {
            require_header(line_no);
            const auto end = section_end(i + 1);
            TokenStream tokens(lines, i + 1, end);
            while (auto tok = tokens.next()) weight_tokens.push_back(*tok);
            weight_section_line = line_no;
            seen_weights = true;
            i = end;
            continue;
        } else if (key == "DISPLAY_DATA_SECTION") {
            i = section_end(i + 1);
            continue;
        } else if (key == "GTSP_SET_SECTION") {
            require_header(line_no);
            if (!set_count) throw ParseError(line_no, "GTSP_SETS must precede GTSP_SET_SECTION");
            const auto end = section_end(i + 1);
            TokenStream tokens(lines, i + 1, end);
            data.clusters.assign(static_cast<std::size_t>(*set_count), {});
            std::vector<int> owner(static_cast<std::size_t>(*dimension), 0);
            std::vector<bool> set_seen(static_cast<std::size_t>(*set_count), false);
            for (int k = 0; k < *set_count; ++k) {
                auto id_tok = tokens.next();
                if (!id_tok)
                    throw ParseError(tokens.current_line(), "GTSP_SET_SECTION has " + std::to_string(k) +
                                                                " sets, GTSP_SETS is " + std::to_string(*set_count));
                const int set_id = parse_number<int>(id_tok->first, id_tok->second, "set id");
                if (set_id < 1 || set_id > *set_count)
                    throw ParseError(id_tok->second, "set id " + std::to_string(set_id) + " outside 1.." +
                                                         std::to_string(*set_count));
                if (set_seen[static_cast<std::size_t>(set_id - 1)])
                    throw ParseError(id_tok->second, "set " + std::to_string(set_id) + " defined twice");
                set_seen[static_cast<std::size_t>(set_id - 1)] = true;
                auto &members = data.clusters[static_cast<std::size_t>(set_id - 1)];
                bool terminated = false;
                while (auto tok = tokens.next()) {
                    const int v = parse_number<int>(tok->first, tok->second, "vertex id");
                    if (v == -1) {
                        terminated = true;
                        break;
                    }
                    if (v < 1 || v > *dimension)
                        throw ParseError(tok->second, "vertex " + std::to_string(v) + " outside 1.." +
                                                          std::to_string(*dimension));
                    auto &o = owner[static_cast<std::size_t>(v - 1)];
                    if (o != 0)
                        throw ParseError(tok->second, "partition violated: vertex " + std::to_string(v) +
                                                          " appears in set " + std::to_string(o) + " and set " +
                                                          std::to_string(set_id));
                    o = set_id;
                    members.push_back(v);
                }
                if (!terminated)
                    throw ParseError(id_tok->second, "set " + std::to_string(set_id) + " is missing its -1 terminator");
                if (members.empty()) throw ParseError(id_tok->second, "set " + std::to_string(set_id) + " is empty");
            }
            if (auto extra = tokens.next())
                throw ParseError(extra->second, "GTSP_SET_SECTION has more sets than GTSP_SETS");
            for (std::size_t v = 0; v < owner.size(); ++v)
                if (owner[v] == 0)
                    throw ParseError(line_no, "partition violated: vertex " + std::to_string(v + 1) + " is in no set");
            seen_sets = true;
            i = end;
            continue;
        } else {
            throw ParseError(line_no, "unrecognised header line '" + std::string(t) + "'");
        }
        ++i;
    }

    const std::size_t last_line = lines.empty() ? 0 : lines.back().number;
    if (!seen_type) throw ParseError(last_line, "missing TYPE: GTSP");
    if (!dimension) throw ParseError(last_line, "missing DIMENSION");
    if (!set_count) throw ParseError(last_line, "missing GTSP_SETS");
    if (!kind) throw ParseError(last_line, "missing EDGE_WEIGHT_TYPE");
    if (*set_count > *dimension) throw ParseError(last_line, "GTSP_SETS exceeds DIMENSION");
    if (!seen_sets) throw ParseError(last_line, "missing GTSP_SET_SECTION");
    if (!seen_eof) throw ParseError(last_line, "missing EOF");

    data.kind = *kind;
    data.n = *dimension;
    const auto n = static_cast<std::size_t>(*dimension);
    if (*kind == WeightKind::Explicit) {
        if (seen_coords) throw ParseError(last_line, "NODE_COORD_SECTION given for EXPLICIT instance");
        if (!seen_weights) throw ParseError(last_line, "missing EDGE_WEIGHT_SECTION");
        if (data.format == WeightFormat::None) throw ParseError(weight_section_line, "EXPLICIT requires EDGE_WEIGHT_FORMAT");
        std::size_t expected = 0;
        switch (data.format) {
            case WeightFormat::FullMatrix: expected = n * n; break;
            case WeightFormat::UpperRow: expected = n * (n - 1) / 2; break;
            case WeightFormat::LowerDiagRow: expected = n * (n + 1) / 2; break;
            case WeightFormat::None: break;
        }
        if (weight_tokens.size() != expected)
            throw ParseError(weight_section_line, "EDGE_WEIGHT_SECTION has " + std::to_string(weight_tokens.size()) +
                                                      " entries, expected " + std::to_string(expected));
        data.explicit_costs.assign(n * n, 0);
        std::size_t k = 0;
        auto next_weight = [&]() {
            const auto &tok = weight_tokens[k++];
            const auto w = parse_number<Cost>(tok.first, tok.second, "integer edge weight");
            if (w < 0) throw ParseError(tok.second, "negative edge weight");
            return std::pair{w, tok.second};
        };
        for (std::size_t u = 0; u < n; ++u) {
            if (data.format == WeightFormat::FullMatrix) {
                for (std::size_t v = 0; v < n; ++v) {
                    const auto [w, line] = next_weight();
                    if (v < u && data.explicit_costs[v * n + u] != w)
                        throw ParseError(line, "asymmetric weight between " + std::to_string(u + 1) + " and " +
                                                   std::to_string(v + 1));
                    if (v != u) data.explicit_costs[u * n + v] = w;
                }
            } else if (data.format == WeightFormat::UpperRow) {
                for (std::size_t v = u + 1; v < n; ++v) {
                    const auto w = next_weight().first;
                    data.explicit_costs[u * n + v] = data.explicit_costs[v * n + u] = w;
                }
            } else {
                for (std::size_t v = 0; v <= u; ++v) {
                    const auto w = next_weight().first;
                    if (v != u) data.explicit_costs[u * n + v] = data.explicit_costs[v * n + u] = w;
                }
            }
        }
    } else {
        if (seen_weights) throw ParseError(weight_section_line, "EDGE_WEIGHT_SECTION given for coordinate instance");
        if (!seen_coords) throw ParseError(last_line, "missing NODE_COORD_SECTION");
    }

    try {
        return Instance(std::move(data));
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
}

// Writes an instance in the same GTSPLIB dialect parse_gtsplib reads.
inline std::string write_gtsplib(const Instance &inst) {
    const auto &d = inst.data();
    std::ostringstream out;
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    out << "NAME: " << d.name << '\n' << "TYPE: GTSP\n";
    if (!d.comment.empty()) {
        std::istringstream lines(d.comment);
        for (std::string line; std::getline(lines, line);) out << "COMMENT: " << line << '\n';
    }
    out << "DIMENSION: " << d.n << '\n'
        << "GTSP_SETS: " << d.clusters.size() << '\n'
        << "EDGE_WEIGHT_TYPE: " << to_string(d.kind) << '\n';
    const auto n = static_cast<std::size_t>(d.n);
    if (d.kind == WeightKind::Explicit) {
        out << "EDGE_WEIGHT_FORMAT: " << to_string(d.format) << '\n' << "EDGE_WEIGHT_SECTION\n";
        for (std::size_t u = 0; u < n; ++u) {
            std::size_t begin = 0, end = n;
            if (d.format == WeightFormat::UpperRow) begin = u + 1;
            if (d.format == WeightFormat::LowerDiagRow) end = u + 1;
            if (begin >= end) continue;
            for (std::size_t v = begin; v < end; ++v) out << (v == begin ? "" : " ") << d.explicit_costs[u * n + v];
            out << '\n';
        }
    } else {
        out << "NODE_COORD_SECTION\n";
        for (std::size_t v = 0; v < n; ++v) out << v + 1 << ' ' << d.coords[v].x << ' ' << d.coords[v].y << '\n';
    }
    out << "GTSP_SET_SECTION\n";
    for (std::size_t c = 0; c < d.clusters.size(); ++c) {
        out << c + 1;
        for (int v : d.clusters[c]) out << ' ' << v;
        out << " -1\n";
    }
    out << "EOF\n";
    return out.str();
}

}  // namespace dsta
