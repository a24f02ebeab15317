#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

// Column-ordered result tables with CSV and schema-versioned JSON writers.
namespace l1pt::io {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os, const std::string& schema,
                    const nlohmann::json& meta = nlohmann::json::object()) const;
};

// Write a table to `path` in the requested format ("csv" or "json").
void write_table(const Table& t, const std::string& path, const std::string& format,
                 const std::string& schema, const nlohmann::json& meta = nlohmann::json::object());

// Companion gnuplot script plotting column `ycol` against `xcol` of a CSV.
void write_gnuplot_script(const std::string& script_path, const std::string& data_path,
                          const Table& t, const std::string& xcol, const std::string& ycol,
                          const std::string& title);

std::string fmt(double v);

}  // namespace l1pt::io
