#include "l1pt/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace l1pt::io {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string cell_to_csv(const nlohmann::json& c) {
    if (c.is_null()) return "";
    if (c.is_number_float()) return fmt(c.get<double>());
    if (c.is_string()) return c.get<std::string>();
    return c.dump();
}

std::size_t find_col(const Table& t, const std::string& name) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        if (t.columns[i] == name) return i;
    throw std::invalid_argument("table column not found: " + name);
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_to_csv(row[i]);
        os << '\n';
    }
}

void Table::write_json(std::ostream& os, const std::string& schema,
                       const nlohmann::json& meta) const {
    nlohmann::json j;
    j["schema"] = schema;
    if (!meta.empty()) j["meta"] = meta;
    j["columns"] = columns;
    j["rows"] = rows;
    os << j.dump(2) << '\n';
}

void write_table(const Table& t, const std::string& path, const std::string& format,
                 const std::string& schema, const nlohmann::json& meta) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    if (format == "csv")
        t.write_csv(os);
    else if (format == "json")
        t.write_json(os, schema, meta);
    else
        throw std::invalid_argument("unknown format (expected csv or json): " + format);
}

void write_gnuplot_script(const std::string& script_path, const std::string& data_path,
                          const Table& t, const std::string& xcol, const std::string& ycol,
                          const std::string& title) {
    const std::size_t xi = find_col(t, xcol) + 1;  // gnuplot columns are 1-based
    const std::size_t yi = find_col(t, ycol) + 1;
    std::ofstream os(script_path);
    if (!os) throw std::runtime_error("cannot open output file: " + script_path);
    os << "set datafile separator ','\n"
       << "set key off\n"
       << "set grid\n"
       << "set title '" << title << "'\n"
       << "set xlabel '" << xcol << "'\n"
       << "set ylabel '" << ycol << "'\n"
       << "plot '" << data_path << "' every ::1 using " << xi << ":" << yi
       << " with linespoints pt 7 ps 0.5\n";
}

}  // namespace l1pt::io
