# -*- coding: utf-8 -*-

"""
fbmlocal is a numerical toolkit for local independence of fractional
Brownian motion.
Copyright (C) 2014, the fbmlocal developers

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program. If not, <see http://www.gnu.org/licenses/>.
"""

import io
import csv
import json
import math
import numpy as np
from jinja2 import Environment, PackageLoader
from .dialects import flattenAbsData

# str
def formatNumber( value, digits = 6 ):

    """
    Short number format of the summaries; inf and nan are spelled out.

    @param value: Number
    @type value: float

    @param digits: Significant digits
    @type digits: int

    @rtype: str
    """

    if value is None:
        return '-'

    if isinstance( value, bool ):
        return 'yes' if value else 'no'

    value = float( value )
    if math.isinf( value ):
        return 'inf' if value > 0 else '-inf'

    return '%.*g' % ( digits, value )

# str
def formatValue( value ):

    """
    Exact, locale independent text of a value for CSV cells and header
    lines: floats by repr, the infinity as 'inf', lists joined by ';'.

    @param value: Value
    @type value: type

    @rtype: str
    """

    if value is None:
        return ''

    if isinstance( value, ( bool, np.bool_ ) ):
        return 'true' if value else 'false'

    if isinstance( value, ( float, np.floating ) ):
        value = float( value )
        if math.isinf( value ):
            return 'inf' if value > 0 else '-inf'

        return repr( value )

    if isinstance( value, ( int, np.integer ) ):
        return str( int( value ) )

    if isinstance( value, ( list, tuple, np.ndarray ) ):
        return ';'.join([ formatValue( v ) for v in value ])

    return str( value )

# type
def plainData( value ):

    """
    Converts a report dictionary into JSON compatible data: numpy scalars
    become Python numbers, the infinity becomes the string 'inf' and nan
    becomes null.

    @param value: Value
    @type value: type

    @rtype: type
    """

    if isinstance( value, dict ):
        return { str( k ): plainData( v ) for k, v in value.items() }

    if isinstance( value, ( list, tuple, np.ndarray ) ):
        return [ plainData( v ) for v in value ]

    if isinstance( value, ( bool, np.bool_ ) ):
        return bool( value )

    if isinstance( value, ( int, np.integer ) ):
        return int( value )

    if isinstance( value, ( float, np.floating ) ):
        value = float( value )
        if math.isnan( value ):
            return None

        if math.isinf( value ):
            return 'inf' if value > 0 else '-inf'

        return value

    return value

class Widget( object ):

    """
    Base Widget class for output rendering purposes.
    """

    # Default template path
    default_template = None

    # void
    def __init__( self, environment = None, template = None, text = None ):

        self._environment = environment or Environment(
            loader = PackageLoader( 'fbmlocal' ),
            keep_trailing_newline = False
        )
        self._environment.filters['num'] = formatNumber
        self._text = text
        self._template = template or self.default_template

    # dict
    def getData( self, element ):

        return {}

    # list<str>
    def getTemplate( self, element ):

        return [ self._template ]

    # str
    def render( self, element ):

        t = self._environment.select_template( self.getTemplate( element ) ) \
            if self._text is None \
            else self._environment.from_string( self._text )

        data = { 'e': element }
        data.update( self.getData( element ) )

        return t.render( data )

class Summary( Widget ):

    """
    One line summary of a report. Commands with a template of their own
    (summary/<name>.jinja2) use it, the others the generic one.
    """

    default_template = 'summary/%(name)s.jinja2'

    # list<str>
    def getTemplate( self, element ):

        return [ 
            self._template % { 'name': element.name.replace( '-', '_' ) },
            'summary/report.jinja2'
        ]

    # dict
    def getData( self, element ):

        return {
            'fits': sorted( element.fits.items() ),
            'values': element.values,
            'rows': len( element.table ) if element.table is not None else 0,
            'flagged': element.state.isFlagged(),
            'message': element.state.getMessage()
        }

class CheckReport( Widget ):

    default_template = 'checks.jinja2'

    # dict
    def getData( self, element ):

        return {
            'passed': sum([ 1 for c in element if c.passed ]),
            'failed': sum([ 1 for c in element if not c.passed ])
        }

class Csv( Widget ):

    """
    CSV rendering of a report: '# key=value' header lines with the full
    parameter set, then the fits, values and state of the report, then a
    header row and one row per table row. Reports without a table list
    their values as name,value rows. Comma separator, LF line endings.
    """

    # void
    def __init__( self, config = None, environment = None ):

        """
        CSV rendering of a report.

        @param config: Formatted (name, value) pairs of the run
        @type config: list<tuple<str,str>>
        """

        super( Csv, self ).__init__( environment )
        self._config = list( config or [] )

    # list<tuple<str,str>>
    def getHeader( self, element ):

        """
        Returns the (key, value) pairs of the header comment lines.

        @rtype: list<tuple<str,str>>
        """

        header = [ ( 'command', element.name ) ] + list( self._config )

        extra = flattenAbsData({
            'fit': { key: fit.getData() for key, fit in element.fits.items() },
            'state': { k: v for k, v in element.state.getState().items() \
                if k not in ( 'required', 'error' ) }
        })

        if element.table is not None:
            extra.update( flattenAbsData({ 'value': element.values }) )

        header += [ ( key, formatValue( extra[ key ] ) ) for key in sorted( extra ) ]
        return header

    # str
    def render( self, element ):

        stream = io.StringIO()
        for key, value in self.getHeader( element ):
            stream.write( '# {}={}\n'.format( key, value ) )

        writer = csv.writer( stream, delimiter = ',', lineterminator = '\n' )
        if element.table is None:
            writer.writerow([ 'name', 'value' ])
            for key in sorted( element.values ):
                writer.writerow([ key, formatValue( element.values[ key ] ) ])

            return stream.getvalue()

        records = element.table.getRecords()
        if records:
            columns = list( records[0].keys() )
            writer.writerow( columns )
            for record in records:
                writer.writerow([ formatValue( record[ c ] ) for c in columns ])

        return stream.getvalue()

class Json( Widget ):

    """
    JSON rendering of a report with sorted keys; the top-level "config"
    object carries the full parameter set of the run.
    """

    # void
    def __init__( self, config = None, environment = None ):
        super( Json, self ).__init__( environment )
        self._config = config

    # str
    def render( self, element ):

        data = element.getData() if hasattr( element, 'getData' ) else dict( element )
        data['config'] = dict( self._config ) if self._config is not None else data.get( 'config', {} )

        return json.dumps( plainData( data ), sort_keys = True, indent = 2 ) + '\n'
