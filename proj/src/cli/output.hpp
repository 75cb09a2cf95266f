#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zs::cli {

// %.17g, with -0 printed as 0.
std::string num(double v);

struct CsvWriter {
    std::ostream& os;
    void header(const std::string& line) { os << line << '\n'; }
    template <typename... Ts>
    void row(const Ts&... cells)
    {
        bool first = true;
        ((os << (first ? "" : ",") << cell(cells), first = false), ...);
        os << '\n';
    }

private:
    static std::string cell(double v) { return num(v); }
    static std::string cell(const std::string& s) { return s; }
    static std::string cell(const char* s) { return s; }
    template <typename I>
    static std::string cell(I v) requires std::is_integral_v<I>
    {
        return std::to_string(v);
    }
};

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    bool scatter = false;
};

struct Figure {
    std::string id;
    std::string title;
    std::string xlabel;
    std::string ylabel;
    std::vector<Series> series;
    bool equal_aspect = false;
};

void write_svg(std::ostream& os, const Figure& fig);
void write_figure_csv(std::ostream& os, const Figure& fig);

}  // namespace zs::cli
